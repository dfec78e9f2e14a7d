#include "affmon/region.hpp"

#include "affmon/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace affmon {

namespace {

// valid only for integer points: divide out the lhs content, floor the bound
void tighten_row(Vec& lhs, Int& rhs) {
    Int g = content(lhs);
    if (g > 1) {
        for (Int& x : lhs) x = exact_div(x, g);
        rhs = floor_div(rhs, g);
    }
}

} // namespace

void LatticeRegion::add_le(Vec coeffs, Int bound) {
    assert(coeffs.size() == dim_);
    if (is_zero(coeffs)) {
        if (bound < 0) infeasible_constant_ = true;
        return;
    }
    rows_.emplace_back(std::move(coeffs), std::move(bound));
}

void LatticeRegion::add_ge(Vec coeffs, Int bound) {
    add_le(negate(std::move(coeffs)), -bound);
}

std::vector<std::vector<std::pair<Vec, Int>>> LatticeRegion::eliminate() const {
    std::vector<std::vector<Row>> levels(dim_ + 1);
    levels[dim_].reserve(rows_.size());
    for (Row r : rows_) {
        tighten_row(r.first, r.second);
        levels[dim_].push_back(std::move(r));
    }
    for (std::size_t k = dim_; k > 0; --k) {
        const std::size_t v = k - 1;
        std::map<Vec, Int> best; // lhs -> tightest rhs
        auto keep = [&](Vec lhs, Int rhs) {
            if (is_zero(lhs)) return; // implied by the parent rows during descent
            tighten_row(lhs, rhs);
            auto it = best.find(lhs);
            if (it == best.end())
                best.emplace(std::move(lhs), std::move(rhs));
            else if (rhs < it->second)
                it->second = rhs;
        };
        std::vector<const Row*> pos, neg;
        for (const Row& r : levels[k]) {
            if (r.first[v] > 0)
                pos.push_back(&r);
            else if (r.first[v] < 0)
                neg.push_back(&r);
            else
                keep(r.first, r.second);
        }
        for (const Row* p : pos)
            for (const Row* n : neg) {
                const Int a = p->first[v];    // > 0
                const Int b = -(n->first[v]); // > 0
                Vec lhs(dim_, Int(0));
                for (std::size_t j = 0; j < dim_; ++j) lhs[j] = b * p->first[j] + a * n->first[j];
                assert(lhs[v] == 0);
                keep(std::move(lhs), b * p->second + a * n->second);
            }
        levels[v].reserve(best.size());
        for (auto& [lhs, rhs] : best) levels[v].emplace_back(lhs, rhs);
    }
    return levels;
}

bool LatticeRegion::rational_feasible() const {
    if (infeasible_constant_) return false;
    using QRow = std::pair<Vec, Rat>;
    std::vector<QRow> cur;
    cur.reserve(rows_.size());
    for (const Row& r : rows_) {
        Vec lhs = r.first;
        Rat rhs(r.second);
        Int g = content(lhs);
        if (g > 1) {
            for (Int& x : lhs) x = exact_div(x, g);
            rhs /= g;
        }
        cur.emplace_back(std::move(lhs), std::move(rhs));
    }
    for (std::size_t k = dim_; k > 0; --k) {
        const std::size_t v = k - 1;
        std::vector<const QRow*> pos, neg;
        std::vector<QRow> next;
        for (const QRow& r : cur) {
            if (r.first[v] > 0)
                pos.push_back(&r);
            else if (r.first[v] < 0)
                neg.push_back(&r);
            else
                next.push_back(r);
        }
        std::map<Vec, Rat> best;
        for (const QRow* p : pos)
            for (const QRow* n : neg) {
                const Int a = p->first[v];
                const Int b = -(n->first[v]);
                Vec lhs(dim_, Int(0));
                for (std::size_t j = 0; j < dim_; ++j) lhs[j] = b * p->first[j] + a * n->first[j];
                Rat rhs = Rat(b) * p->second + Rat(a) * n->second;
                if (is_zero(lhs)) {
                    if (rhs < 0) return false;
                    continue;
                }
                Int g = content(lhs);
                if (g > 1) {
                    for (Int& x : lhs) x = exact_div(x, g);
                    rhs /= g;
                }
                rhs.canonicalize();
                auto it = best.find(lhs);
                if (it == best.end())
                    best.emplace(std::move(lhs), std::move(rhs));
                else if (rhs < it->second)
                    it->second = rhs;
            }
        for (auto& [lhs, rhs] : best) next.emplace_back(lhs, rhs);
        cur = std::move(next);
    }
    return true;
}

std::vector<Vec> LatticeRegion::enumerate() const {
    std::vector<Vec> out;
    if (infeasible_constant_) return out;
    if (!rational_feasible()) return out;
    if (dim_ == 0) {
        out.push_back(Vec{});
        return out;
    }
    auto levels = eliminate();

    Vec z(dim_, Int(0));
    // bounds for variable k come from levels[k+1]
    auto rec = [&](auto&& self, std::size_t k) -> void {
        bool has_lo = false, has_hi = false;
        Int lo, hi;
        for (const Row& r : levels[k + 1]) {
            if (r.first[k] == 0) continue;
            Int residual = r.second;
            for (std::size_t j = 0; j < k; ++j) residual -= r.first[j] * z[j];
            if (r.first[k] > 0) {
                Int b = floor_div(residual, r.first[k]);
                if (!has_hi || b < hi) hi = b, has_hi = true;
            } else {
                Int b = ceil_div(residual, r.first[k]);
                if (!has_lo || b > lo) lo = b, has_lo = true;
            }
        }
        if (!has_lo || !has_hi) throw domain_error("unbounded_region", "enumeration over an unbounded region");
        for (Int v = lo; v <= hi; ++v) {
            z[k] = v;
            if (k + 1 == dim_)
                out.push_back(z);
            else
                self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace affmon
