#include "rdnet/dual_mesh.hpp"

#include <cmath>

namespace rdnet {

namespace {

double triangle_area(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                     const Eigen::Vector2d& c) {
    return 0.5 * std::abs((b.x() - a.x()) * (c.y() - a.y()) -
                          (b.y() - a.y()) * (c.x() - a.x()));
}

Eigen::Vector2d circumcenter2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                               const Eigen::Vector2d& c) {
    const Eigen::Vector2d u = b - a, v = c - a;
    const double d = 2.0 * (u.x() * v.y() - u.y() * v.x());
    const double uu = u.squaredNorm(), vv = v.squaredNorm();
    return a + Eigen::Vector2d((v.y() * uu - u.y() * vv) / d, (u.x() * vv - v.x() * uu) / d);
}

}  // namespace

DualComplex circumcentric_dual(const SimplicialComplex& K, double tol) {
    if (!is_well_centered(K, tol))
        throw NotWellCentered("a circumcenter leaves its triangle; the circumcentric dual "
                              "would have nonpositive measures");

    DualComplex dual;
    const Index N = K.num_vertices();
    const Index Ne = K.num_edges();
    dual.dual_vertex_measures = Vector::Zero(N);
    dual.dual_edge_measures = Vector::Zero(Ne);

    if (K.dimension == 1) {
        dual.circumcenters.resize(K.num_cells(), 1);
        for (Index t = 0; t < K.num_cells(); ++t) {
            const auto& c = K.cells[t];
            const double half = 0.5 * K.cell_measure(t);
            dual.circumcenters(t, 0) = 0.5 * (K.vertices(c[0], 0) + K.vertices(c[1], 0));
            dual.dual_vertex_measures(c[0]) += half;
            dual.dual_vertex_measures(c[1]) += half;
        }
        // The dual of a segment is a single point; its 0-measure is 1.
        dual.dual_edge_measures.setOnes();
        dual.boundary_dual_measures = Vector::Ones(K.num_boundary_vertices());
    } else {
        dual.circumcenters.resize(K.num_cells(), 2);
        for (Index t = 0; t < K.num_cells(); ++t) {
            const auto& c = K.cells[t];
            const Eigen::Vector2d a = K.vertices.row(c[0]), b = K.vertices.row(c[1]),
                                  p = K.vertices.row(c[2]);
            const Eigen::Vector2d cc = circumcenter2d(a, b, p);
            dual.circumcenters.row(t) = cc;

            // Corner quadrilaterals: vertex, the midpoints of its two incident
            // cell edges, and the circumcenter. The three quads tile the cell.
            for (int i = 0; i < 3; ++i) {
                const Eigen::Vector2d v = K.vertices.row(c[i]);
                const Eigen::Vector2d m1 = 0.5 * (v + Eigen::Vector2d(K.vertices.row(c[(i + 1) % 3])));
                const Eigen::Vector2d m2 = 0.5 * (v + Eigen::Vector2d(K.vertices.row(c[(i + 2) % 3])));
                dual.dual_vertex_measures(c[i]) +=
                    triangle_area(v, m1, cc) + triangle_area(v, cc, m2);
            }
        }

        for (Index e = 0; e < Ne; ++e) {
            const Eigen::Vector2d mid =
                0.5 * (Eigen::Vector2d(K.vertices.row(K.edges[e][0])) +
                       Eigen::Vector2d(K.vertices.row(K.edges[e][1])));
            double len = 0.0;
            for (int side = 0; side < 2; ++side) {
                const int t = K.edge_cells[e][side];
                if (t >= 0) len += (Eigen::Vector2d(dual.circumcenters.row(t)) - mid).norm();
            }
            dual.dual_edge_measures(e) = len;
        }

        // Boundary dual of a boundary vertex: half of each incident boundary edge.
        dual.boundary_dual_measures = Vector::Zero(K.num_boundary_vertices());
        std::vector<Index> boundary_pos(N, -1);
        for (Index i = 0; i < K.num_boundary_vertices(); ++i)
            boundary_pos[K.boundary_vertices[i]] = i;
        for (Index e = 0; e < Ne; ++e) {
            if (K.edge_cells[e][1] >= 0 || K.edge_cells[e][0] < 0) continue;  // interior edge
            const double half =
                0.5 * (K.vertices.row(K.edges[e][0]) - K.vertices.row(K.edges[e][1])).norm();
            for (int v : {K.edges[e][0], K.edges[e][1]})
                dual.boundary_dual_measures(boundary_pos[v]) += half;
        }
    }

    dual.total_volume = dual.dual_vertex_measures.sum();
    return dual;
}

}  // namespace rdnet
