#pragma once

#include "affmon/integer.hpp"

#include <cstddef>
#include <vector>

namespace affmon {

// Full-dimensional rational polyhedral cone in the coordinates of a rank-d lattice.
// Rays and facet forms are primitive and lex-sorted, so every downstream index
// (divisors, height-one primes) is reproducible.
struct Cone {
    std::size_t ambient_rank = 0;
    std::vector<Vec> rays;   // primitive extreme rays
    std::vector<Vec> facets; // primitive support forms, nonnegative on the cone
};

struct Face {
    std::vector<std::size_t> facet_subset; // all facets vanishing on the face
    std::vector<std::size_t> ray_subset;   // rays lying on the face
    std::size_t dim = 0;
};

// Irredundant primitive facet forms of cone(generators); tolerates lineality,
// requires the generators to span rank-dimensional space.
std::vector<Vec> support_forms(const std::vector<Vec>& generators, std::size_t rank);

// Rays + facets of a full-dimensional pointed cone.
Cone dual_description(const std::vector<Vec>& generators, std::size_t rank);

// Every face including {0} and the cone itself, ordered by (dim, ray subset).
std::vector<Face> enumerate_faces(const Cone& c);

bool in_cone(const Cone& c, const Vec& z);
bool in_relative_interior(const Cone& c, const Vec& z);

// z in cone(generators) over the rationals, decided by Fourier-Motzkin feasibility.
// Independent of support_forms; used as an oracle.
bool in_cone_hull(const std::vector<Vec>& generators, const Vec& z);

} // namespace affmon
