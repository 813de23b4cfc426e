#pragma once

#include "rdnet/mesh.hpp"

namespace rdnet {

/** Circumcentric dual of a well-centered complex.

    Vertex duals carry the compartment volumes: in 2-D the dual cell of a
    vertex is the union of its corner quadrilaterals (vertex, two edge
    midpoints, circumcenter) over all incident triangles; in 1-D it is the
    union of half-segments. Edge duals are the circumcenter-to-circumcenter
    segments crossing each primal edge (in 1-D, single points of measure 1). */
struct DualComplex {
    Matrix circumcenters;          // num_cells x n
    Vector dual_vertex_measures;   // |*_i v_k|, per vertex
    Vector dual_edge_measures;     // |*_i sigma^1_k|, per primal edge
    Vector boundary_dual_measures; // per boundary vertex, ascending vertex order
    double total_volume = 0.0;     // sum of dual vertex measures
};

/** Build the dual; throws NotWellCentered if any circumcenter sits outside
    its triangle by less than the barycentric margin tol. */
DualComplex circumcentric_dual(const SimplicialComplex& K, double tol = 1e-9);

}  // namespace rdnet
