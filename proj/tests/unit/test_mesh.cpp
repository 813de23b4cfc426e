#include <doctest.h>

#include <cmath>

#include "rdnet/mesh.hpp"

using namespace rdnet;

TEST_CASE("two glued equilateral triangles") {
    const SimplicialComplex K = fig1_mesh();
    CHECK(K.num_vertices() == 4);
    CHECK(K.num_edges() == 5);
    CHECK(K.num_cells() == 2);
    CHECK(K.num_boundary_vertices() == 4);  // every vertex touches the boundary
    CHECK(is_well_centered(K));
}

TEST_CASE("1-D chain") {
    const SimplicialComplex K = interval_mesh(3, 2.0);  // vertices at 0, 1, 2
    CHECK(K.num_vertices() == 3);
    CHECK(K.num_cells() == 2);
    CHECK(K.num_edges() == 2);
    REQUIRE(K.num_boundary_vertices() == 2);
    CHECK(K.boundary_vertices[0] == 0);
    CHECK(K.boundary_vertices[1] == 2);
    CHECK(is_well_centered(K));
}

TEST_CASE("1-D cycle has no boundary") {
    Matrix vertices(3, 1);
    vertices << 0.0, 1.0, 2.0;
    const SimplicialComplex K = build_complex(vertices, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(K.num_boundary_vertices() == 0);
}

TEST_CASE("vertex-pinched pair of triangles is rejected") {
    Matrix vertices(5, 2);
    vertices << 0.0, 0.0,
                1.0, 0.0,
                0.5, 0.866,
                -1.0, 0.0,
                -0.5, -0.866;
    CHECK_THROWS_AS(build_complex(vertices, {{0, 1, 2}, {0, 3, 4}}), NonManifold);
}

TEST_CASE("an edge shared by three triangles is rejected") {
    Matrix vertices(5, 2);
    vertices << 0.0, 0.0,
                1.0, 0.0,
                0.5, 1.0,
                0.5, -1.0,
                1.5, 1.0;
    CHECK_THROWS_AS(build_complex(vertices, {{0, 1, 2}, {0, 3, 1}, {0, 1, 4}}), NonManifold);
}

TEST_CASE("orientation conflict across a shared edge is rejected") {
    Matrix vertices(4, 2);
    vertices << 0.0, 0.0,
                1.0, 0.0,
                0.5, 1.0,
                0.5, -1.0;
    // Both triangles traverse the shared edge 0 -> 1.
    CHECK_THROWS_AS(build_complex(vertices, {{0, 1, 2}, {0, 1, 3}}), InconsistentOrientation);
}

TEST_CASE("1-D orientation conflict at an interior vertex") {
    Matrix vertices(3, 1);
    vertices << 0.0, 1.0, 2.0;
    CHECK_THROWS_AS(build_complex(vertices, {{0, 1}, {2, 1}}), InconsistentOrientation);
}

TEST_CASE("degenerate cells are rejected") {
    SUBCASE("collinear triangle") {
        Matrix vertices(3, 2);
        vertices << 0.0, 0.0, 1.0, 0.0, 2.0, 0.0;
        CHECK_THROWS_AS(build_complex(vertices, {{0, 1, 2}}), DegenerateCell);
    }
    SUBCASE("zero-length segment") {
        Matrix vertices(2, 1);
        vertices << 1.0, 1.0;
        CHECK_THROWS_AS(build_complex(vertices, {{0, 1}}), DegenerateCell);
    }
    SUBCASE("repeated vertex") {
        Matrix vertices(3, 2);
        vertices << 0.0, 0.0, 1.0, 0.0, 0.5, 1.0;
        CHECK_THROWS_AS(build_complex(vertices, {{0, 1, 1}}), DegenerateCell);
    }
}

TEST_CASE("basic input validation") {
    Matrix vertices(3, 2);
    vertices << 0.0, 0.0, 1.0, 0.0, 0.5, 1.0;
    CHECK_THROWS_AS(build_complex(vertices, {{0, 1, 3}}), ValidationError);
    CHECK_THROWS_AS(build_complex(vertices, {{0, 1, 2}, {1, 2, 0}}), ValidationError);
}

TEST_CASE("well-centered classification") {
    SUBCASE("equilateral triangle: circumcenter at the barycenter") {
        Matrix vertices(3, 2);
        vertices << 0.0, 0.0, 1.0, 0.0, 0.5, std::sqrt(3.0) / 2.0;
        CHECK(is_well_centered(build_complex(vertices, {{0, 1, 2}})));
    }
    SUBCASE("right triangle: circumcenter on the hypotenuse") {
        Matrix vertices(3, 2);
        vertices << 0.0, 0.0, 1.0, 0.0, 0.0, 1.0;
        CHECK(!is_well_centered(build_complex(vertices, {{0, 1, 2}})));
    }
    SUBCASE("obtuse triangle: circumcenter outside") {
        Matrix vertices(3, 2);
        vertices << 0.0, 0.0, 1.0, 0.0, 0.5, 0.2;
        CHECK(!is_well_centered(build_complex(vertices, {{0, 1, 2}})));
    }
    SUBCASE("1-D is always well-centered") {
        CHECK(is_well_centered(interval_mesh(5, 1.0)));
    }
}

TEST_CASE("equilateral strip generator") {
    const SimplicialComplex K = equilateral_strip(2, 3, 1.0);
    CHECK(K.num_vertices() == 12);
    CHECK(K.num_cells() == 12);
    CHECK(is_well_centered(K));
    // Euler characteristic of a disk: V - E + F = 1.
    CHECK(K.num_vertices() - K.num_edges() + K.num_cells() == 1);
}

TEST_CASE("edges are lexicographically ordered low to high") {
    const SimplicialComplex K = fig1_mesh();
    for (std::size_t e = 0; e < K.edges.size(); ++e) {
        CHECK(K.edges[e][0] < K.edges[e][1]);
        if (e > 0) CHECK(K.edges[e - 1] < K.edges[e]);
    }
}
