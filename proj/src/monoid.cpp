#include "affmon/monoid.hpp"

#include "affmon/errors.hpp"
#include "affmon/region.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace affmon {

namespace {

std::vector<Vec> nonzero_coords(const std::vector<Vec>& vs) {
    std::set<Vec, decltype(&lex_less)> seen(&lex_less);
    std::vector<Vec> out;
    for (const Vec& v : vs)
        if (!is_zero(v) && seen.insert(v).second) out.push_back(v);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// quotient projection Z^d -> Z^(d-u) by a saturated sublattice given by basis rows
struct QuotientMap {
    IntMatrix u_transform; // from SNF of the basis transposed
    std::size_t sub_rank = 0;

    Vec apply(const Vec& x) const {
        Vec y = u_transform.apply(x);
        return Vec(y.begin() + static_cast<long>(sub_rank), y.end());
    }
};

QuotientMap quotient_by(const std::vector<Vec>& basis_rows, std::size_t dim) {
    QuotientMap qm;
    qm.sub_rank = basis_rows.size();
    SnfResult s = snf(IntMatrix::from_rows(basis_rows, dim).transpose());
    for (std::size_t i = 0; i < qm.sub_rank; ++i)
        if (s.s.at(i, i) != 1)
            throw domain_error("not_saturated_sublattice", "quotient by a non-saturated sublattice");
    qm.u_transform = s.u;
    return qm;
}

} // namespace

const Cone& AffineMonoid::the_cone() const {
    if (!cone) throw domain_error("not_sharp", "operation needs a sharp monoid");
    return *cone;
}

void AffineMonoid::require_sharp_saturated(const std::string& op) const {
    if (!sharp) throw domain_error("not_sharp", op + " needs a sharp monoid (split units first)");
    if (!saturated) throw domain_error("not_saturated", op + " needs a saturated monoid (saturate first)");
}

Vec AffineMonoid::to_gp(const Vec& ambient) const {
    auto c = try_to_gp(ambient);
    if (!c) throw domain_error("not_in_lattice", "vector is not in Q^gp");
    return *c;
}

std::optional<Vec> AffineMonoid::try_to_gp(const Vec& ambient) const {
    if (ambient.size() != ambient_rank)
        throw domain_error("dimension_mismatch", "vector length != ambient rank");
    return solve_integer(IntMatrix::from_rows(gp_basis, ambient_rank).transpose(), ambient);
}

Vec AffineMonoid::from_gp(const Vec& coords) const {
    if (coords.size() != rank) throw domain_error("dimension_mismatch", "vector length != rank");
    Vec out(ambient_rank, Int(0));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < ambient_rank; ++j) out[j] += coords[i] * gp_basis[i][j];
    return out;
}

Vec AffineMonoid::valuations_gp(const Vec& z) const {
    const Cone& c = the_cone();
    Vec v(c.facets.size());
    for (std::size_t i = 0; i < c.facets.size(); ++i) v[i] = dot(c.facets[i], z);
    return v;
}

Int AffineMonoid::degree_gp(const Vec& z) const {
    Int s = 0;
    for (const Vec& f : the_cone().facets) s += dot(f, z);
    return s;
}

bool AffineMonoid::contains_gp(const Vec& z) const {
    const Cone& c = the_cone();
    if (z.size() != rank) throw domain_error("dimension_mismatch", "vector length != rank");
    if (saturated) return in_cone(c, z);
    std::vector<Vec> gens = nonzero_coords(gen_coords);
    std::map<Vec, bool> memo;
    auto rec = [&](auto&& self, const Vec& w) -> bool {
        if (is_zero(w)) return true;
        if (!in_cone(c, w)) return false;
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const Vec& g : gens)
            if (self(self, sub(w, g))) {
                ok = true;
                break;
            }
        memo[w] = ok;
        return ok;
    };
    return rec(rec, z);
}

std::vector<Vec> hilbert_basis_of_cone(const Cone& c) {
    const std::size_t d = c.ambient_rank;
    if (d == 0) return {};
    const auto& forms = c.facets;
    auto deg = [&](const Vec& z) {
        Int s = 0;
        for (const Vec& f : forms) s += dot(f, z);
        return s;
    };
    // lattice points of degree up to B0 generate the monoid, where B0 bounds the
    // degree of any fundamental-parallelepiped point over an independent ray subset
    std::vector<Int> ray_degs;
    for (const Vec& r : c.rays) ray_degs.push_back(deg(r));
    std::sort(ray_degs.begin(), ray_degs.end(), std::greater<Int>());
    Int b0 = 0;
    for (std::size_t i = 0; i < std::min(d, ray_degs.size()); ++i) b0 += ray_degs[i];

    LatticeRegion region(d);
    for (const Vec& f : forms) region.add_ge(f, 0);
    Vec degform(d, Int(0));
    for (const Vec& f : forms)
        for (std::size_t j = 0; j < d; ++j) degform[j] += f[j];
    region.add_ge(degform, 1); // exclude the origin
    region.add_le(degform, b0);

    std::vector<Vec> candidates = region.enumerate();
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Vec& a, const Vec& b) { return deg(a) < deg(b); });

    std::vector<Vec> hb;
    std::vector<Vec> hb_vals;
    for (const Vec& z : candidates) {
        Vec vz(forms.size());
        for (std::size_t i = 0; i < forms.size(); ++i) vz[i] = dot(forms[i], z);
        bool reducible = false;
        for (const Vec& vh : hb_vals)
            if (dominates(vz, vh)) {
                reducible = true;
                break;
            }
        if (!reducible) {
            hb.push_back(z);
            hb_vals.push_back(std::move(vz));
        }
    }
    std::sort(hb.begin(), hb.end(), lex_less);
    return hb;
}

std::vector<Vec> bounded_elements_bfs(const AffineMonoid& q, const Int& bound) {
    if (!q.sharp) throw domain_error("not_sharp", "bounded enumeration needs a sharp monoid");
    if (bound < 0) throw domain_error("bad_parameters", "bound must be nonnegative");
    std::vector<Vec> gens = nonzero_coords(q.gen_coords);
    std::set<Vec, decltype(&lex_less)> seen(&lex_less);
    std::deque<Vec> queue;
    Vec zero(q.rank, Int(0));
    seen.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        Vec z = std::move(queue.front());
        queue.pop_front();
        for (const Vec& g : gens) {
            Vec w = add(z, g);
            if (q.degree_gp(w) > bound) continue;
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

AffineMonoid build(const std::vector<Vec>& generators, std::size_t ambient_rank) {
    if (generators.empty()) throw domain_error("empty_generators", "monoid needs at least one generator");
    for (const Vec& g : generators)
        if (g.size() != ambient_rank)
            throw domain_error("dimension_mismatch", "generator length != ambient rank");

    AffineMonoid q;
    q.ambient_rank = ambient_rank;
    q.generators = generators;

    HnfResult h = hnf(IntMatrix::from_rows(generators, ambient_rank));
    q.rank = h.rank;
    for (std::size_t i = 0; i < h.rank; ++i) q.gp_basis.push_back(h.h.row(i));

    IntMatrix bt = IntMatrix::from_rows(q.gp_basis, ambient_rank).transpose();
    for (const Vec& g : generators) {
        auto c = solve_integer(bt, g);
        if (!c) throw domain_error("internal", "generator not in its own lattice");
        q.gen_coords.push_back(std::move(*c));
    }

    std::vector<Vec> forms = support_forms(q.gen_coords, q.rank);
    std::vector<Vec> unit_gen_coords, unit_gens_ambient;
    for (std::size_t i = 0; i < q.gen_coords.size(); ++i) {
        const Vec& g = q.gen_coords[i];
        if (is_zero(g)) continue;
        bool in_lineality = true;
        for (const Vec& f : forms)
            if (dot(f, g) != 0) {
                in_lineality = false;
                break;
            }
        if (in_lineality) {
            unit_gen_coords.push_back(g);
            unit_gens_ambient.push_back(generators[i]);
        }
    }
    q.sharp = unit_gen_coords.empty();

    if (q.sharp) {
        q.cone = dual_description(q.gen_coords, q.rank);
        std::vector<Vec> hb = hilbert_basis_of_cone(*q.cone);
        // q.saturated is still false here, so contains_gp uses generator-sum search
        bool all_in = true;
        for (const Vec& z : hb)
            if (!q.contains_gp(z)) {
                all_in = false;
                break;
            }
        q.saturated = all_in;
        if (q.saturated)
            for (const Vec& z : hb) q.hilbert_basis.push_back(q.from_gp(z));
    } else {
        HnfResult uh = hnf(IntMatrix::from_rows(unit_gens_ambient, ambient_rank));
        for (std::size_t i = 0; i < uh.rank; ++i) q.units_basis.push_back(uh.h.row(i));
        // saturation is decided on the sharp quotient
        q.saturated = split_units(q).first.saturated;
    }
    return q;
}

std::pair<AffineMonoid, std::size_t> split_units(const AffineMonoid& q) {
    if (q.sharp) return {q, 0};
    std::vector<Vec> forms = support_forms(q.gen_coords, q.rank);
    // saturated unit lattice Q^gp ∩ lineality; quotienting by it keeps the
    // quotient torsion-free even when Q^x itself is not saturated in Q^gp
    std::vector<Vec> lineality = kernel_basis(IntMatrix::from_rows(forms, q.rank));
    QuotientMap qm = quotient_by(lineality, q.rank);
    std::vector<Vec> projected;
    for (const Vec& g : q.gen_coords) projected.push_back(qm.apply(g));
    AffineMonoid sharp_part = build(projected, q.rank - qm.sub_rank);
    sharp_part.name = q.name.empty() ? std::string("sharp_part") : q.name + "_sharp";
    return {sharp_part, qm.sub_rank};
}

AffineMonoid saturate(const AffineMonoid& q) {
    if (!q.sharp) throw domain_error("not_sharp", "saturate needs a sharp monoid (split units first)");
    if (q.saturated) return q;
    std::vector<Vec> hb = hilbert_basis_of_cone(q.the_cone());
    std::vector<Vec> gens;
    for (const Vec& z : hb) gens.push_back(q.from_gp(z));
    AffineMonoid s = build(gens, q.ambient_rank);
    s.name = q.name.empty() ? std::string("saturation") : q.name + "_sat";
    return s;
}

std::size_t dimension(const AffineMonoid& q) {
    if (!q.sharp) throw domain_error("not_sharp", "dimension is stated for sharp monoids");
    return q.rank;
}

std::vector<PrimeIdeal> spectrum(const AffineMonoid& q) {
    q.require_sharp_saturated("spectrum");
    std::vector<Face> faces = enumerate_faces(q.the_cone());
    std::vector<PrimeIdeal> primes;
    for (Face& f : faces) primes.push_back({f, q.rank - f.dim});
    std::sort(primes.begin(), primes.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.face.ray_subset < b.face.ray_subset;
    });
    return primes;
}

std::vector<PrimeIdeal> height_one_primes(const AffineMonoid& q) {
    q.require_sharp_saturated("height_one_primes");
    if (q.rank < 1) throw domain_error("wrong_rank", "height-one primes need rank >= 1");
    const Cone& c = q.the_cone();
    std::vector<PrimeIdeal> primes;
    for (std::size_t j = 0; j < c.facets.size(); ++j) {
        Face f;
        f.facet_subset = {j};
        for (std::size_t i = 0; i < c.rays.size(); ++i)
            if (dot(c.facets[j], c.rays[i]) == 0) f.ray_subset.push_back(i);
        f.dim = q.rank - 1;
        primes.push_back({std::move(f), 1});
    }
    return primes;
}

std::size_t max_prime_chain_length(const AffineMonoid& q) {
    std::vector<PrimeIdeal> primes = spectrum(q); // sorted by ascending height
    std::vector<std::size_t> longest(primes.size(), 0);
    std::size_t best = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            // prime j strictly below prime i <=> face of j strictly contains face of i
            const auto& ri = primes[i].face.ray_subset;
            const auto& rj = primes[j].face.ray_subset;
            if (ri.size() >= rj.size()) continue;
            if (std::includes(rj.begin(), rj.end(), ri.begin(), ri.end()) &&
                primes[j].face.dim > primes[i].face.dim)
                longest[i] = std::max(longest[i], longest[j] + 1);
        }
        best = std::max(best, longest[i]);
    }
    return best;
}

AffineMonoid standard_monoid(const std::string& kind, const std::vector<long>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw domain_error("bad_parameters", kind + " takes " + std::to_string(n) + " parameter(s)");
    };
    if (kind == "free") {
        need(1);
        long r = params[0];
        if (r < 0) throw domain_error("bad_parameters", "free rank must be >= 0");
        std::vector<Vec> gens;
        if (r == 0) {
            gens.push_back(Vec{});
        } else {
            for (long i = 0; i < r; ++i) {
                Vec e(r, Int(0));
                e[i] = 1;
                gens.push_back(std::move(e));
            }
        }
        AffineMonoid q = build(gens, static_cast<std::size_t>(r));
        q.name = "free_" + std::to_string(r);
        return q;
    }
    if (kind == "a_n") {
        need(1);
        long n = params[0];
        if (n < 1) throw domain_error("bad_parameters", "a_n needs n >= 1");
        AffineMonoid q = build({{n + 1, 0}, {1, 1}, {0, n + 1}}, 2);
        q.name = "a_" + std::to_string(n);
        return q;
    }
    if (kind == "jungian") {
        need(2);
        long n = params[0], m = params[1];
        if (n < 1 || m < 0 || m > n || std::gcd(m, n) != 1)
            throw domain_error("bad_parameters", "jungian needs n >= 1, 0 <= m <= n, gcd(m,n) = 1");
        std::vector<Vec> gens = {{n, 0}, {0, n}};
        for (long i = 1; i < n; ++i) gens.push_back({i, (i * m) % n});
        AffineMonoid q = build(gens, 2);
        q.name = "jungian_" + std::to_string(n) + "_" + std::to_string(m);
        return q;
    }
    if (kind == "twisted") {
        need(0);
        AffineMonoid q = build({{1, 0}, {1, 1}, {1, 2}, {1, 3}}, 2);
        q.name = "twisted";
        return q;
    }
    if (kind == "quadric") {
        need(0);
        AffineMonoid q = build({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}}, 4);
        q.name = "quadric";
        return q;
    }
    throw domain_error("unknown_constructor", "unknown monoid constructor: " + kind);
}

} // namespace affmon
