#pragma once

#include "affmon/cone.hpp"
#include "affmon/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affmon {

// Prime ideal Q \ (face ∩ Q) of a sharp saturated monoid.
struct PrimeIdeal {
    Face face;
    std::size_t height = 0; // rank(Q) - dim(face)
};

// Finitely generated submonoid of Z^l with derived lattice/cone data.
// Immutable after build(); all operations on it are pure.
struct AffineMonoid {
    std::string name;
    std::size_t ambient_rank = 0;
    std::vector<Vec> generators;    // as given, ambient coordinates
    std::vector<Vec> gp_basis;      // HNF basis of Q^gp inside Z^l
    std::size_t rank = 0;           // rank(Q^gp)
    std::vector<Vec> units_basis;   // basis of Q^x, ambient coordinates
    bool sharp = false;
    bool saturated = false;
    std::optional<Cone> cone;       // Q^gp coordinates; present iff sharp
    std::vector<Vec> hilbert_basis; // ambient coordinates; nonempty only if sharp && saturated
    std::vector<Vec> gen_coords;    // generators in Q^gp coordinates

    const Cone& the_cone() const;
    void require_sharp_saturated(const std::string& op) const;

    Vec to_gp(const Vec& ambient) const; // throws domain_error("not_in_lattice")
    std::optional<Vec> try_to_gp(const Vec& ambient) const;
    Vec from_gp(const Vec& coords) const;

    // facet valuations of a gp-coordinate point
    Vec valuations_gp(const Vec& z) const;
    Int degree_gp(const Vec& z) const; // total facet valuation

    // membership of a gp-coordinate point, valid for non-saturated monoids too
    bool contains_gp(const Vec& z) const;
};

AffineMonoid build(const std::vector<Vec>& generators, std::size_t ambient_rank);

// (sharp image of Q in Q^gp/Q^x, rank of Q^x)
std::pair<AffineMonoid, std::size_t> split_units(const AffineMonoid& q);

// root closure cone(Q) ∩ Q^gp of a sharp monoid
AffineMonoid saturate(const AffineMonoid& q);

std::size_t dimension(const AffineMonoid& q);

std::vector<PrimeIdeal> spectrum(const AffineMonoid& q);

// facet primes in canonical facet order; indexes all divisor vectors
std::vector<PrimeIdeal> height_one_primes(const AffineMonoid& q);

// kinds: free(r), a_n(n), jungian(n,m), twisted, quadric
AffineMonoid standard_monoid(const std::string& kind, const std::vector<long>& params);

// Hilbert basis of cone ∩ Z^d, lex-sorted gp coordinates
std::vector<Vec> hilbert_basis_of_cone(const Cone& c);

// all z in Q with degree_gp(z) <= bound, BFS over generator sums (sharp Q)
std::vector<Vec> bounded_elements_bfs(const AffineMonoid& q, const Int& bound);

// longest strict chain in Spec(Q); equals dimension for sharp saturated Q
std::size_t max_prime_chain_length(const AffineMonoid& q);

} // namespace affmon
