#include "affmon/cone.hpp"

#include "affmon/errors.hpp"
#include "affmon/lattice.hpp"
#include "affmon/region.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace affmon {

namespace {

std::vector<Vec> nonzero_unique_primitive(const std::vector<Vec>& gens) {
    std::set<Vec, decltype(&lex_less)> seen(&lex_less);
    std::vector<Vec> out;
    for (const Vec& g : gens) {
        if (is_zero(g)) continue;
        Vec p = primitive(g);
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::size_t rank_of(const std::vector<Vec>& vs, std::size_t cols) {
    if (vs.empty()) return 0;
    return lattice_rank(IntMatrix::from_rows(vs, cols));
}

void validate_generators(const std::vector<Vec>& generators, std::size_t rank) {
    if (generators.empty()) throw domain_error("empty_generators", "cone needs at least one generator");
    for (const Vec& g : generators)
        if (g.size() != rank) throw domain_error("dimension_mismatch", "generator length != ambient rank");
    if (rank_of(generators, rank) != rank)
        throw domain_error("not_full_dimensional", "generators do not span a full-dimensional cone");
}

} // namespace

std::vector<Vec> support_forms(const std::vector<Vec>& generators, std::size_t rank) {
    validate_generators(generators, rank);
    std::vector<Vec> gens = nonzero_unique_primitive(generators);
    std::set<Vec, decltype(&lex_less)> forms(&lex_less);
    if (rank == 0) return {};

    // every facet hyperplane is spanned by rank-1 of the generators
    std::vector<std::size_t> idx(rank - 1);
    auto consider = [&](const std::vector<Vec>& subset) {
        auto kernel = kernel_basis(IntMatrix::from_rows(subset, rank));
        if (kernel.size() != 1) return; // subset does not span a hyperplane
        Vec f = kernel[0];
        bool pos = false, neg = false;
        for (const Vec& g : gens) {
            int s = sgn(dot(f, g));
            pos |= s > 0;
            neg |= s < 0;
        }
        if (pos && neg) return;
        if (neg) f = negate(std::move(f));
        std::vector<Vec> contact;
        for (const Vec& g : gens)
            if (dot(f, g) == 0) contact.push_back(g);
        if (rank_of(contact, rank) != rank - 1) return; // supporting but not a facet
        forms.insert(std::move(f));
    };
    // iterate (rank-1)-subsets of gens; the empty subset covers rank == 1
    auto rec = [&](auto&& self, std::size_t from, std::size_t depth, std::vector<Vec>& acc) -> void {
        if (depth == rank - 1) {
            consider(acc);
            return;
        }
        for (std::size_t i = from; i < gens.size(); ++i) {
            acc.push_back(gens[i]);
            self(self, i + 1, depth + 1, acc);
            acc.pop_back();
        }
    };
    std::vector<Vec> acc;
    rec(rec, 0, 0, acc);
    return {forms.begin(), forms.end()};
}

Cone dual_description(const std::vector<Vec>& generators, std::size_t rank) {
    Cone c;
    c.ambient_rank = rank;
    c.facets = support_forms(generators, rank);
    if (rank > 0 && !kernel_basis(IntMatrix::from_rows(c.facets, rank)).empty())
        throw domain_error("not_pointed", "cone has a nontrivial lineality space");
    for (const Vec& g : nonzero_unique_primitive(generators)) {
        std::vector<Vec> contact;
        for (const Vec& f : c.facets)
            if (dot(f, g) == 0) contact.push_back(f);
        if (rank_of(contact, rank) == rank - 1) c.rays.push_back(g);
    }
    return c;
}

std::vector<Face> enumerate_faces(const Cone& c) {
    const std::size_t nf = c.facets.size();
    const std::size_t nr = c.rays.size();
    if (nf > 20 || nr > 63) throw domain_error("too_large", "face enumeration limit exceeded");

    std::vector<std::uint64_t> vanish(nf, 0);
    for (std::size_t j = 0; j < nf; ++j)
        for (std::size_t i = 0; i < nr; ++i)
            if (dot(c.facets[j], c.rays[i]) == 0) vanish[j] |= std::uint64_t(1) << i;

    const std::uint64_t all_rays = nr == 0 ? 0 : (~std::uint64_t(0) >> (64 - nr));
    std::vector<std::uint64_t> raymask(std::size_t(1) << nf, all_rays);
    std::set<std::uint64_t> distinct;
    distinct.insert(all_rays);
    for (std::uint64_t mask = 1; mask < raymask.size(); ++mask) {
        int low = __builtin_ctzll(mask);
        raymask[mask] = raymask[mask & (mask - 1)] & vanish[low];
        distinct.insert(raymask[mask]);
    }

    std::vector<Face> faces;
    for (std::uint64_t rm : distinct) {
        Face f;
        std::vector<Vec> rs;
        for (std::size_t i = 0; i < nr; ++i)
            if (rm & (std::uint64_t(1) << i)) {
                f.ray_subset.push_back(i);
                rs.push_back(c.rays[i]);
            }
        for (std::size_t j = 0; j < nf; ++j)
            if ((vanish[j] & rm) == rm) f.facet_subset.push_back(j);
        f.dim = rank_of(rs, c.ambient_rank);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.ray_subset < b.ray_subset;
    });
    return faces;
}

bool in_cone(const Cone& c, const Vec& z) {
    for (const Vec& f : c.facets)
        if (dot(f, z) < 0) return false;
    return true;
}

bool in_relative_interior(const Cone& c, const Vec& z) {
    for (const Vec& f : c.facets)
        if (dot(f, z) < 1) return false;
    return true;
}

bool in_cone_hull(const std::vector<Vec>& generators, const Vec& z) {
    const std::size_t k = generators.size();
    LatticeRegion lp(k);
    for (std::size_t i = 0; i < k; ++i) {
        Vec e(k, Int(0));
        e[i] = 1;
        lp.add_ge(std::move(e), 0);
    }
    for (std::size_t j = 0; j < z.size(); ++j) {
        Vec row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = generators[i][j];
        lp.add_le(row, z[j]);
        lp.add_ge(std::move(row), z[j]);
    }
    return lp.rational_feasible();
}

} // namespace affmon
