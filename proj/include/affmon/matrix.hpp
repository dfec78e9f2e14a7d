#pragma once

#include "affmon/errors.hpp"
#include "affmon/integer.hpp"

#include <cstddef>
#include <vector>

namespace affmon {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    std::vector<Vec> row_list() const;

    IntMatrix transpose() const;

    // M * x
    Vec apply(const Vec& x) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row i -= q * row k
    void add_row_multiple(std::size_t i, std::size_t k, const Int& q);
    // col j -= q * col k
    void add_col_multiple(std::size_t j, std::size_t k, const Int& q);

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    // Bareiss fraction-free elimination; square matrices only.
    Int determinant() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

} // namespace affmon
