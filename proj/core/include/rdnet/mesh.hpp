#pragma once

#include <array>
#include <vector>

#include "rdnet/errors.hpp"
#include "rdnet/types.hpp"

namespace rdnet {

/** A pure, oriented simplicial complex of dimension 1 or 2, flat-embedded
    in R^n with manifold-with-boundary topology.

    Edges are derived with a fixed global convention: sorted
    lexicographically by (low vertex, high vertex) and oriented from the
    low to the high index. Any consistent orientation produces the same
    diffusion Laplacian, so the convention is purely for determinism. */
struct SimplicialComplex {
    int dimension = 0;                      // n, 1 or 2
    Matrix vertices;                        // N x n coordinates
    std::vector<std::vector<int>> cells;    // top cells, n+1 vertex indices each

    // Derived connectivity.
    std::vector<std::array<int, 2>> edges;      // N_e, low -> high
    std::vector<std::array<int, 2>> edge_cells; // adjacent top cells per edge, -1 padded (n=2)
    std::vector<int> boundary_vertices;         // ascending

    Index num_vertices() const { return vertices.rows(); }
    Index num_edges() const { return static_cast<Index>(edges.size()); }
    Index num_cells() const { return static_cast<Index>(cells.size()); }
    Index num_boundary_vertices() const { return static_cast<Index>(boundary_vertices.size()); }

    /** Unsigned n-measure of a top cell (length or area). */
    double cell_measure(Index cell) const;
};

/** Validate and index a complex from raw vertices and top cells.

    Throws NonManifold (an edge in three or more triangles, a vertex in
    three or more segments, or a pinched vertex whose star is not
    edge-connected), InconsistentOrientation (a shared face induced with
    the same sign twice), or DegenerateCell (zero measure). */
SimplicialComplex build_complex(const Matrix& vertices,
                                const std::vector<std::vector<int>>& cells);

/** True iff every triangle contains its own circumcenter with barycentric
    margin at least tol. 1-D complexes are always well-centered. */
bool is_well_centered(const SimplicialComplex& K, double tol = 1e-9);

// Built-in generators.

/** Uniform 1-D chain on [0, length] with n_v vertices. */
SimplicialComplex interval_mesh(int n_v, double length = 1.0);

/** Two unit equilateral triangles glued along a shared edge: four
    vertices, five edges, four compartments. */
SimplicialComplex fig1_mesh();

/** rows x cols grid of rhombi, each split into two equilateral triangles
    of the given side. */
SimplicialComplex equilateral_strip(int rows, int cols, double side = 1.0);

}  // namespace rdnet
