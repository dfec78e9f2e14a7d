#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affmon/cone.hpp"
#include "affmon/lattice.hpp"
#include "affmon/region.hpp"

#include <random>
#include <set>

using namespace affmon;

namespace {

// lattice points of [-box, box]^d that satisfy all facet inequalities
std::vector<Vec> box_points_in_cone(const Cone& c, int box) {
    LatticeRegion r(c.ambient_rank);
    for (std::size_t j = 0; j < c.ambient_rank; ++j) {
        Vec e(c.ambient_rank, Int(0));
        e[j] = 1;
        r.add_le(e, box);
        r.add_ge(e, -box);
    }
    for (const Vec& f : c.facets) r.add_ge(f, 0);
    return r.enumerate();
}

} // namespace

TEST_CASE("region enumerator basics") {
    LatticeRegion r(2);
    r.add_ge({1, 0}, 0);
    r.add_ge({0, 1}, 0);
    r.add_le({1, 1}, 2);
    auto pts = r.enumerate();
    CHECK(pts == std::vector<Vec>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});

    LatticeRegion empty(1);
    empty.add_ge({2}, 1);
    empty.add_le({2}, 1); // 2x = 1 has no integer solution
    CHECK(empty.rational_feasible());
    CHECK(empty.enumerate().empty());

    LatticeRegion infeasible(1);
    infeasible.add_ge({1}, 3);
    infeasible.add_le({1}, 1);
    CHECK(!infeasible.rational_feasible());

    LatticeRegion unbounded(2);
    unbounded.add_ge({1, 0}, 0);
    unbounded.add_ge({0, 1}, 0);
    CHECK_THROWS_AS(unbounded.enumerate(), affmon::domain_error);
}

TEST_CASE("dual description of the twisted-cubic cone") {
    Cone c = dual_description({{1, 0}, {1, 1}, {1, 2}, {1, 3}}, 2);
    CHECK(c.rays == std::vector<Vec>{{1, 0}, {1, 3}});
    CHECK(c.facets == std::vector<Vec>{{0, 1}, {3, -1}});
    // each form is nonnegative on all generators and vanishes on one ray
    for (const Vec& g : std::vector<Vec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}}) {
        CHECK(dot(c.facets[0], g) >= 0);
        CHECK(dot(c.facets[1], g) >= 0);
    }
    CHECK(dot(c.facets[0], c.rays[0]) == 0);
    CHECK(dot(c.facets[1], c.rays[1]) == 0);
}

TEST_CASE("dual description of the first quadrant") {
    Cone c = dual_description({{1, 0}, {0, 1}}, 2);
    CHECK(c.rays == std::vector<Vec>{{0, 1}, {1, 0}});
    CHECK(c.facets == std::vector<Vec>{{0, 1}, {1, 0}});
}

TEST_CASE("quadric generators restricted to their rank-3 lattice") {
    std::vector<Vec> gens4 = {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};
    HnfResult h = hnf(IntMatrix::from_rows(gens4, 4));
    REQUIRE(h.rank == 3);
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < h.rank; ++i) basis.push_back(h.h.row(i));
    IntMatrix bt = IntMatrix::from_rows(basis, 4).transpose();
    std::vector<Vec> coords;
    for (const Vec& g : gens4) {
        auto c = solve_integer(bt, g);
        REQUIRE(c.has_value());
        coords.push_back(*c);
    }
    Cone c = dual_description(coords, 3);
    CHECK(c.rays.size() == 4);
    CHECK(c.facets.size() == 4);
    CHECK(enumerate_faces(c).size() == 10); // 1 + 4 + 4 + 1
}

TEST_CASE("face enumeration of small cones") {
    Cone quadrant = dual_description({{1, 0}, {0, 1}}, 2);
    auto faces = enumerate_faces(quadrant);
    REQUIRE(faces.size() == 4);
    CHECK(faces[0].dim == 0);
    CHECK(faces[1].dim == 1);
    CHECK(faces[2].dim == 1);
    CHECK(faces[3].dim == 2);

    Cone halfline = dual_description({{1}}, 1);
    CHECK(enumerate_faces(halfline).size() == 2);
}

TEST_CASE("relative interior tests") {
    Cone quadrant = dual_description({{1, 0}, {0, 1}}, 2);
    CHECK(in_relative_interior(quadrant, {1, 1}));
    CHECK(!in_relative_interior(quadrant, {1, 0}));

    Cone twisted = dual_description({{1, 0}, {1, 1}, {1, 2}, {1, 3}}, 2);
    CHECK(!in_relative_interior(twisted, {1, 3}));
    CHECK(in_relative_interior(twisted, {1, 2}));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(dual_description({}, 2), affmon::domain_error);
    CHECK_THROWS_AS(dual_description({{1, 0}}, 2), affmon::domain_error);          // not full-dimensional
    CHECK_THROWS_AS(dual_description({{1, 0}, {-1, 0}, {0, 1}}, 2), affmon::domain_error); // lineality
}

TEST_CASE("double description round trip on random pointed cones") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> count(2, 5);
    int done = 0;
    while (done < 25) {
        std::size_t d = 2 + done % 2;
        std::vector<Vec> gens(count(rng));
        for (auto& g : gens) {
            g.resize(d);
            for (auto& x : g) x = coord(rng);
        }
        Cone c;
        try {
            c = dual_description(gens, d);
        } catch (const affmon::domain_error&) {
            continue; // degenerate sample; draw again
        }
        ++done;
        CHECK(c.facets.size() >= d);
        // facet-side membership == generator-side membership on a box
        for (const Vec& z : box_points_in_cone(c, 3)) CHECK(in_cone_hull(gens, z));
        LatticeRegion whole(d);
        for (std::size_t j = 0; j < d; ++j) {
            Vec e(d, Int(0));
            e[j] = 1;
            whole.add_le(e, 3);
            whole.add_ge(e, -3);
        }
        std::set<Vec, decltype(&lex_less)> inside(&lex_less);
        auto pts = box_points_in_cone(c, 3);
        inside.insert(pts.begin(), pts.end());
        for (const Vec& z : whole.enumerate()) CHECK(in_cone_hull(gens, z) == inside.contains(z));

        // face lattice closed under intersection of ray subsets
        auto faces = enumerate_faces(c);
        std::set<std::vector<std::size_t>> raysets;
        for (const Face& f : faces) raysets.insert(f.ray_subset);
        for (const Face& a : faces)
            for (const Face& b : faces) {
                std::vector<std::size_t> meet;
                std::set_intersection(a.ray_subset.begin(), a.ray_subset.end(), b.ray_subset.begin(),
                                      b.ray_subset.end(), std::back_inserter(meet));
                CHECK(raysets.contains(meet));
            }
    }
}
