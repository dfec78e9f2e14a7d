#pragma once

#include "affmon/integer.hpp"

#include <utility>
#include <vector>

namespace affmon {

// Integer points of a polyhedron given by linear inequalities, via exact
// Fourier-Motzkin elimination. Enumeration requires a bounded solution set
// and yields points in ascending lexicographic order.
class LatticeRegion {
public:
    explicit LatticeRegion(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }

    // coeffs . z <= bound
    void add_le(Vec coeffs, Int bound);
    // coeffs . z >= bound
    void add_ge(Vec coeffs, Int bound);

    // Exact rational feasibility of the system (no integrality).
    bool rational_feasible() const;

    // All integer solutions, lex-sorted. Throws domain_error("unbounded_region")
    // if some variable is unbounded over the rational relaxation.
    std::vector<Vec> enumerate() const;

private:
    using Row = std::pair<Vec, Int>; // lhs . z <= rhs

    // levels[k] constrains variables 0..k-1; levels[dim_] is the input
    std::vector<std::vector<Row>> eliminate() const;

    std::size_t dim_;
    std::vector<Row> rows_;
    bool infeasible_constant_ = false;
};

} // namespace affmon
