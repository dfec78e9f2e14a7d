#pragma once

#include "affmon/matrix.hpp"

#include <optional>
#include <vector>

namespace affmon {

// Finitely generated abelian group in invariant-factor form.
struct FinAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors; // each >= 2, each dividing the next

    bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool operator==(const FinAbGroup&) const = default;
};

struct HnfResult {
    IntMatrix h; // row Hermite normal form
    IntMatrix u; // unimodular, u * m == h
    std::size_t rank = 0;
};

struct SnfResult {
    IntMatrix s; // diagonal, d1 | d2 | ..., di >= 0
    IntMatrix u; // unimodular row transform
    IntMatrix w; // unimodular column transform, u * m * w == s
    std::size_t rank = 0;
};

// Row Hermite normal form with minimal-absolute-value pivoting (deterministic).
// Pivots are positive; entries above a pivot are reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

// Smith normal form.
SnfResult snf(const IntMatrix& m);

// Structure of Z^rows / (column image of m).
FinAbGroup cokernel_structure(const IntMatrix& m);

// One integer solution of m*x = b, or nullopt if none exists.
// Throws domain_error on length mismatch.
std::optional<Vec> solve_integer(const IntMatrix& m, const Vec& b);

// Basis of the saturated lattice {x : m*x = 0}, HNF-reduced rows.
std::vector<Vec> kernel_basis(const IntMatrix& m);

std::size_t lattice_rank(const IntMatrix& m);

} // namespace affmon
