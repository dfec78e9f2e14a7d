#include "affmon/lattice.hpp"

#include "affmon/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

namespace affmon {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// index of the row in [from, rows) with the smallest nonzero |h(i,c)|, lowest index on ties
std::size_t min_abs_pivot_row(const IntMatrix& h, std::size_t c, std::size_t from) {
    std::size_t best = npos;
    Int best_abs;
    for (std::size_t i = from; i < h.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        Int a = abs(h.at(i, c));
        if (best == npos || a < best_abs) {
            best = i;
            best_abs = a;
        }
    }
    return best;
}

} // namespace

HnfResult hnf(const IntMatrix& m) {
    HnfResult res{m, IntMatrix::identity(m.rows()), 0};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // Euclid on column c until a single nonzero entry remains at row r
        while (true) {
            std::size_t p = min_abs_pivot_row(h, c, r);
            if (p == npos) break;
            if (p != r) {
                h.swap_rows(r, p);
                u.swap_rows(r, p);
            }
            bool cleared = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = floor_div(h.at(i, c), h.at(r, c));
                h.add_row_multiple(i, r, q);
                u.add_row_multiple(i, r, q);
                if (h.at(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(r, c) == 0) continue; // no pivot in this column
        if (h.at(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            h.add_row_multiple(i, r, q);
            u.add_row_multiple(i, r, q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

SnfResult snf(const IntMatrix& m) {
    SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
    IntMatrix& s = res.s;
    IntMatrix& u = res.u;
    IntMatrix& w = res.w;
    const std::size_t k = std::min(s.rows(), s.cols());
    std::size_t t = 0;
    while (t < k) {
        // smallest |entry| in the trailing submatrix, scanned row-major for determinism
        std::size_t pi = npos, pj = npos;
        Int best_abs;
        for (std::size_t i = t; i < s.rows(); ++i)
            for (std::size_t j = t; j < s.cols(); ++j) {
                if (s.at(i, j) == 0) continue;
                Int a = abs(s.at(i, j));
                if (pi == npos || a < best_abs) {
                    pi = i;
                    pj = j;
                    best_abs = a;
                }
            }
        if (pi == npos) break; // trailing submatrix is zero
        if (pi != t) {
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            s.swap_cols(t, pj);
            w.swap_cols(t, pj);
        }
        bool dirty = false;
        for (std::size_t i = t + 1; i < s.rows(); ++i) {
            if (s.at(i, t) == 0) continue;
            Int q = floor_div(s.at(i, t), s.at(t, t));
            s.add_row_multiple(i, t, q);
            u.add_row_multiple(i, t, q);
            if (s.at(i, t) != 0) dirty = true;
        }
        if (dirty) continue;
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
            if (s.at(t, j) == 0) continue;
            Int q = floor_div(s.at(t, j), s.at(t, t));
            s.add_col_multiple(j, t, q);
            w.add_col_multiple(j, t, q);
            if (s.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;
        // divisibility of the pivot into the rest
        bool fixed = false;
        for (std::size_t i = t + 1; i < s.rows() && !fixed; ++i)
            for (std::size_t j = t + 1; j < s.cols() && !fixed; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    s.add_row_multiple(t, i, Int(-1));
                    u.add_row_multiple(t, i, Int(-1));
                    fixed = true;
                }
        if (fixed) continue;
        if (s.at(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    res.rank = t;
    return res;
}

FinAbGroup cokernel_structure(const IntMatrix& m) {
    SnfResult r = snf(m);
    FinAbGroup g;
    g.free_rank = m.rows() - r.rank;
    for (std::size_t i = 0; i < r.rank; ++i)
        if (r.s.at(i, i) > 1) g.invariant_factors.push_back(r.s.at(i, i));
    return g;
}

std::optional<Vec> solve_integer(const IntMatrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw domain_error("dimension_mismatch", "rhs length must equal row count");
    SnfResult r = snf(m);
    Vec c = r.u.apply(b);
    const std::size_t k = std::min(m.rows(), m.cols());
    Vec y(m.cols(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < k && r.s.at(i, i) != 0) {
            if (c[i] % r.s.at(i, i) != 0) return std::nullopt;
            y[i] = exact_div(c[i], r.s.at(i, i));
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return r.w.apply(y);
}

std::vector<Vec> kernel_basis(const IntMatrix& m) {
    SnfResult r = snf(m);
    const std::size_t k = std::min(m.rows(), m.cols());
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= k || r.s.at(j, j) == 0) gens.push_back(r.w.col(j));
    if (gens.empty()) return gens;
    HnfResult h = hnf(IntMatrix::from_rows(gens, m.cols()));
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < h.rank; ++i) basis.push_back(h.h.row(i));
    return basis;
}

std::size_t lattice_rank(const IntMatrix& m) { return hnf(m).rank; }

} // namespace affmon
