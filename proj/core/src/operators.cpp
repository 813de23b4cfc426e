#include "rdnet/operators.hpp"

#include <string>
#include <vector>

namespace rdnet {

Vector hodge_star_0(const SimplicialComplex&, const DualComplex& dual) {
    return dual.dual_vertex_measures;  // |v_k| = 1 for 0-simplices
}

Vector hodge_star_1(const SimplicialComplex& K, const DualComplex& dual) {
    const Index Ne = K.num_edges();
    Vector star1(Ne);
    for (Index e = 0; e < Ne; ++e) {
        const double primal_len =
            (K.vertices.row(K.edges[e][0]) - K.vertices.row(K.edges[e][1])).norm();
        star1(e) = dual.dual_edge_measures(e) / primal_len;
    }
    return star1;
}

SparseMatrix exterior_derivative_0(const SimplicialComplex& K) {
    SparseMatrix d(K.num_edges(), K.num_vertices());
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(2 * K.edges.size());
    for (Index e = 0; e < K.num_edges(); ++e) {
        trips.emplace_back(e, K.edges[e][0], -1.0);  // tail (low index)
        trips.emplace_back(e, K.edges[e][1], +1.0);  // head
    }
    d.setFromTriplets(trips.begin(), trips.end());
    return d;
}

SparseMatrix trace_operator(const SimplicialComplex& K) {
    SparseMatrix tr(K.num_boundary_vertices(), K.num_vertices());
    std::vector<Eigen::Triplet<double>> trips;
    for (Index i = 0; i < K.num_boundary_vertices(); ++i)
        trips.emplace_back(i, K.boundary_vertices[i], 1.0);
    tr.setFromTriplets(trips.begin(), trips.end());
    return tr;
}

Operators build_operators(const SimplicialComplex& K, const DualComplex& dual) {
    return Operators{hodge_star_0(K, dual), hodge_star_1(K, dual),
                     exterior_derivative_0(K), trace_operator(K)};
}

SparseMatrix laplacian(const SimplicialComplex& K, const Operators& ops,
                       const Vector& r_d_diag) {
    const Index Ne = K.num_edges();
    const Index N = K.num_vertices();
    if (Ne == 0 || r_d_diag.size() % Ne != 0)
        throw DimensionMismatch("R_d diagonal must have m entries per edge (got " +
                                std::to_string(r_d_diag.size()) + " for " +
                                std::to_string(Ne) + " edges)");
    const Index m = r_d_diag.size() / Ne;
    for (Index i = 0; i < r_d_diag.size(); ++i)
        if (r_d_diag(i) < 0.0)
            throw DomainError("R_d diagonal must be nonnegative");

    // Assemble from the rows of d itself (not the edge list) so flipped
    // orientations still produce the identical matrix: every weight enters
    // as a product of the same two signs.
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(4 * Ne * m);
    std::vector<Index> pos(Ne, -1), neg(Ne, -1);
    for (Index col = 0; col < N; ++col) {
        for (SparseMatrix::InnerIterator it(ops.d, col); it; ++it) {
            if (it.value() > 0)
                pos[it.row()] = col;
            else if (it.value() < 0)
                neg[it.row()] = col;
        }
    }
    for (Index e = 0; e < Ne; ++e) {
        if (pos[e] < 0 || neg[e] < 0)
            throw ValidationError("exterior derivative row " + std::to_string(e) +
                                  " lacks a +1/-1 pair");
        for (Index i = 0; i < m; ++i) {
            const double w = ops.star1(e) * r_d_diag(e * m + i);
            if (w == 0.0) continue;
            const Index a = pos[e] * m + i;
            const Index b = neg[e] * m + i;
            trips.emplace_back(a, a, w);
            trips.emplace_back(b, b, w);
            trips.emplace_back(a, b, -w);
            trips.emplace_back(b, a, -w);
        }
    }
    SparseMatrix delta(m * N, m * N);
    delta.setFromTriplets(trips.begin(), trips.end());
    return delta;
}

}  // namespace rdnet
