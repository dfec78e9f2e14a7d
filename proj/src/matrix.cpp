#include "affmon/matrix.hpp"

#include "affmon/errors.hpp"

#include <cassert>
#include <utility>

namespace affmon {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == cols);
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec IntMatrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec IntMatrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<Vec> IntMatrix::row_list() const {
    std::vector<Vec> rs;
    rs.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
    return rs;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vec IntMatrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw domain_error("dimension_mismatch", "matrix-vector size mismatch");
    Vec y(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(k, c);
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) -= q * at(r, k);
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw domain_error("not_square", "determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    assert(a.cols() == b.rows());
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

} // namespace affmon
