#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affmon/lattice.hpp"

#include <random>

using namespace affmon;

namespace {

IntMatrix mat(std::vector<Vec> rows, std::size_t cols) { return IntMatrix::from_rows(rows, cols); }

bool is_diagonal(const IntMatrix& s) {
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (i != j && s.at(i, j) != 0) return false;
    return true;
}

void check_hnf_contract(const IntMatrix& m) {
    HnfResult r = hnf(m);
    CHECK(abs(r.u.determinant()) == 1);
    CHECK(r.u * m == r.h);
    // echelon with positive pivots and reduced entries above
    std::size_t prev_col = 0;
    bool first = true;
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::size_t c = 0;
        while (c < m.cols() && r.h.at(i, c) == 0) ++c;
        REQUIRE(c < m.cols());
        if (!first) CHECK(c > prev_col);
        first = false;
        prev_col = c;
        CHECK(r.h.at(i, c) > 0);
        for (std::size_t k = 0; k < i; ++k) {
            CHECK(r.h.at(k, c) >= 0);
            CHECK(r.h.at(k, c) < r.h.at(i, c));
        }
    }
    for (std::size_t i = r.rank; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) CHECK(r.h.at(i, j) == 0);
}

void check_snf_contract(const IntMatrix& m) {
    SnfResult r = snf(m);
    CHECK(abs(r.u.determinant()) == 1);
    CHECK(abs(r.w.determinant()) == 1);
    CHECK(r.u * m * r.w == r.s);
    CHECK(is_diagonal(r.s));
    for (std::size_t i = 0; i + 1 < std::min(m.rows(), m.cols()); ++i) {
        CHECK(r.s.at(i, i) >= 0);
        if (r.s.at(i, i) != 0) {
            CHECK(r.s.at(i + 1, i + 1) % r.s.at(i, i) == 0);
        } else {
            CHECK(r.s.at(i + 1, i + 1) == 0);
        }
    }
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    IntMatrix m(rows, cols);
    std::uniform_int_distribution<int> d(lo, hi);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        u.add_row_multiple(i, j, Int(coef(rng)));
    }
    return u;
}

} // namespace

TEST_CASE("hnf on the pinned 2x2 example") {
    IntMatrix m = mat({{2, 4}, {1, 3}}, 2);
    HnfResult r = hnf(m);
    // fully reduced form of the echelon basis {(1,3),(0,2)}
    CHECK(r.h == mat({{1, 1}, {0, 2}}, 2));
    CHECK(r.u * m == r.h);
    CHECK(abs(r.u.determinant()) == 1);
    CHECK(r.rank == 2);
    // same row lattice as the unreduced echelon form [[1,3],[0,2]]
    CHECK(hnf(mat({{1, 3}, {0, 2}}, 2)).h == r.h);
}

TEST_CASE("hnf fixed points") {
    IntMatrix id = IntMatrix::identity(3);
    HnfResult r = hnf(id);
    CHECK(r.h == id);
    CHECK(r.u == id);

    IntMatrix z(2, 3);
    HnfResult rz = hnf(z);
    CHECK(rz.h == z);
    CHECK(rz.rank == 0);
}

TEST_CASE("snf on the pinned examples") {
    SnfResult r = snf(mat({{0, 1}, {3, -1}}, 2));
    CHECK(r.s == mat({{1, 0}, {0, 3}}, 2));
    check_snf_contract(mat({{0, 1}, {3, -1}}, 2));

    SnfResult d2 = snf(mat({{2, 0}, {0, 2}}, 2));
    CHECK(d2.s == mat({{2, 0}, {0, 2}}, 2));

    SnfResult one = snf(mat({{1}}, 1));
    CHECK(one.s == mat({{1}}, 1));
}

TEST_CASE("cokernel structure") {
    FinAbGroup g = cokernel_structure(mat({{0, 1}, {3, -1}}, 2));
    CHECK(g.free_rank == 0);
    CHECK(g.invariant_factors == std::vector<Int>{3});

    // columns (1,0,1),(0,1,1): quotient Z^3/image is infinite cyclic
    IntMatrix m = mat({{1, 0}, {0, 1}, {1, 1}}, 2);
    FinAbGroup f = cokernel_structure(m);
    CHECK(f.free_rank == 1);
    CHECK(f.invariant_factors.empty());
    // brute residue check: [e3] has infinite order and generates
    CHECK(!solve_integer(m, {0, 0, 1}).has_value());
    CHECK(!solve_integer(m, {0, 0, 3}).has_value());
    CHECK(solve_integer(m, {1, 0, 1}).has_value()); // e1 + e3 = first column

    FinAbGroup z = cokernel_structure(IntMatrix(2, 2));
    CHECK(z.free_rank == 2);
    CHECK(z.invariant_factors.empty());
    CHECK(!z.trivial());
    CHECK(cokernel_structure(IntMatrix::identity(2)).trivial());
}

TEST_CASE("solve_integer") {
    IntMatrix m = mat({{1, 0}, {1, 2}}, 2);
    auto x = solve_integer(m, {1, 1});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vec{1, 1});

    CHECK(!solve_integer(mat({{2}}, 1), {1}).has_value());

    IntMatrix id = IntMatrix::identity(3);
    auto y = solve_integer(id, {4, -7, 0});
    REQUIRE(y.has_value());
    CHECK(*y == Vec{4, -7, 0});

    CHECK_THROWS_AS((void)solve_integer(m, {1, 2, 3}), affmon::domain_error);
}

TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(mat({{1, 1}}, 2)) == std::vector<Vec>{{1, -1}});
    CHECK(kernel_basis(IntMatrix::identity(2)).empty());
    CHECK(kernel_basis(mat({{2, 4}}, 2)) == std::vector<Vec>{{2, -1}});
}

TEST_CASE("hnf/snf contracts on random matrices") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 2) % 4;
        IntMatrix m = random_matrix(rng, rows, cols, -6, 6);
        check_hnf_contract(m);
        check_snf_contract(m);
    }
}

TEST_CASE("cokernel invariant under unimodular changes") {
    std::mt19937_64 rng(77001);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 2 + trial % 3, cols = 1 + trial % 4;
        IntMatrix m = random_matrix(rng, rows, cols, -5, 5);
        FinAbGroup g = cokernel_structure(m);
        IntMatrix u = random_unimodular(rng, rows);
        IntMatrix w = random_unimodular(rng, cols);
        CHECK(cokernel_structure(u * m * w) == g);
    }
}

TEST_CASE("solve_integer agrees with bounded search") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m = random_matrix(rng, 2, 2, -3, 3);
        Vec b{d(rng), d(rng)};
        auto x = solve_integer(m, b);
        if (x) {
            CHECK(m.apply(*x) == b);
        } else {
            // no solution may exist in a small box either
            for (int a0 = -6; a0 <= 6; ++a0)
                for (int a1 = -6; a1 <= 6; ++a1) {
                    Vec cand{a0, a1};
                    CHECK(m.apply(cand) != b);
                }
        }
    }
}

TEST_CASE("kernel basis spans and is saturated on random inputs") {
    std::mt19937_64 rng(909090);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + trial % 3, cols = 2 + trial % 3;
        IntMatrix m = random_matrix(rng, rows, cols, -4, 4);
        auto basis = kernel_basis(m);
        for (const Vec& v : basis) CHECK(is_zero(m.apply(v)));
        CHECK(basis.size() == cols - lattice_rank(m));
        if (!basis.empty()) {
            // saturation: any integer kernel point solves over the basis
            IntMatrix bt = IntMatrix::from_rows(basis, cols).transpose();
            std::uniform_int_distribution<int> d(-3, 3);
            for (int k = 0; k < 8; ++k) {
                Vec c(basis.size());
                for (auto& ci : c) ci = d(rng);
                Vec pt = bt.apply(c);
                CHECK(is_zero(m.apply(pt)));
                CHECK(solve_integer(bt, pt).has_value());
            }
        }
    }
}
