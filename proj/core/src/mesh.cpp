#include "rdnet/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace rdnet {

namespace {

std::string edge_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

double signed_area(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                   const Eigen::Vector2d& c) {
    return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

// Star connectivity at a vertex: the triangles incident to it must form a
// single edge-connected fan, otherwise the dual cell of the vertex would be
// ambiguous (two triangles glued at a lone vertex).
void check_vertex_links(const SimplicialComplex& K) {
    const Index N = K.num_vertices();
    std::vector<std::vector<int>> star(N);
    for (int t = 0; t < K.num_cells(); ++t)
        for (int v : K.cells[t]) star[v].push_back(t);

    // Map unordered edge -> adjacent cells for fan traversal.
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (int t = 0; t < K.num_cells(); ++t) {
        const auto& cell = K.cells[t];
        for (std::size_t i = 0; i < cell.size(); ++i)
            for (std::size_t j = i + 1; j < cell.size(); ++j)
                by_edge[{std::min(cell[i], cell[j]), std::max(cell[i], cell[j])}].push_back(t);
    }

    for (int v = 0; v < N; ++v) {
        if (star[v].size() <= 1) continue;
        std::set<int> seen;
        std::vector<int> stack = {star[v][0]};
        seen.insert(star[v][0]);
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            for (int w : K.cells[t]) {
                if (w == v) continue;
                const auto key = std::make_pair(std::min(v, w), std::max(v, w));
                for (int other : by_edge[key]) {
                    if (!seen.count(other) &&
                        std::find(star[v].begin(), star[v].end(), other) != star[v].end()) {
                        seen.insert(other);
                        stack.push_back(other);
                    }
                }
            }
        }
        if (seen.size() != star[v].size())
            throw NonManifold("vertex " + std::to_string(v) +
                              " pinches the complex: its star is not edge-connected");
    }
}

}  // namespace

double SimplicialComplex::cell_measure(Index cell) const {
    const auto& c = cells[cell];
    if (dimension == 1)
        return std::abs(vertices(c[1], 0) - vertices(c[0], 0));
    return std::abs(signed_area(vertices.row(c[0]), vertices.row(c[1]), vertices.row(c[2])));
}

SimplicialComplex build_complex(const Matrix& vertices,
                                const std::vector<std::vector<int>>& cells) {
    if (cells.empty()) throw ValidationError("complex has no cells");
    const std::size_t cell_size = cells.front().size();
    if (cell_size != 2 && cell_size != 3)
        throw ValidationError("top cells must be segments or triangles");
    const int n = static_cast<int>(cell_size) - 1;
    if (vertices.cols() != n)
        throw ValidationError("vertex coordinates must have dimension " + std::to_string(n));

    SimplicialComplex K;
    K.dimension = n;
    K.vertices = vertices;
    K.cells = cells;

    const Index N = vertices.rows();
    std::set<std::vector<int>> dedup;
    for (const auto& c : cells) {
        if (c.size() != cell_size)
            throw ValidationError("all top cells must have the same dimension");
        for (int v : c)
            if (v < 0 || v >= N)
                throw ValidationError("cell vertex index " + std::to_string(v) + " out of range");
        std::vector<int> key = c;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            throw DegenerateCell("cell repeats a vertex");
        if (!dedup.insert(key).second) throw ValidationError("duplicate cell");
    }

    for (Index t = 0; t < K.num_cells(); ++t) {
        // Relative scale guards against near-degenerate float coordinates.
        double extent = 0.0;
        const auto& c = cells[t];
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                extent = std::max(extent,
                                  (vertices.row(c[i]) - vertices.row(c[j])).norm());
        const double measure = K.cell_measure(t);
        const double floor = n == 1 ? 0.0 : 1e-14 * extent * extent;
        if (!(measure > floor))
            throw DegenerateCell("cell " + std::to_string(t) + " has zero measure");
    }

    if (n == 1) {
        // Segments are the edges; orientation check: every shared vertex must
        // be head of one segment and tail of the other.
        std::vector<std::vector<std::pair<int, int>>> at_vertex(N);  // (cell, +1 head / -1 tail)
        for (int t = 0; t < K.num_cells(); ++t) {
            at_vertex[cells[t][0]].push_back({t, -1});
            at_vertex[cells[t][1]].push_back({t, +1});
        }
        for (int v = 0; v < N; ++v) {
            if (at_vertex[v].size() > 2)
                throw NonManifold("vertex " + std::to_string(v) + " belongs to " +
                                  std::to_string(at_vertex[v].size()) + " segments");
            if (at_vertex[v].size() == 2 &&
                at_vertex[v][0].second == at_vertex[v][1].second)
                throw InconsistentOrientation("segments meeting at vertex " + std::to_string(v) +
                                              " induce it with the same sign");
            if (at_vertex[v].size() == 1) K.boundary_vertices.push_back(v);
        }

        std::vector<std::array<int, 2>> edges;
        for (const auto& c : cells)
            edges.push_back({std::min(c[0], c[1]), std::max(c[0], c[1])});
        std::sort(edges.begin(), edges.end());
        K.edges = edges;
        K.edge_cells.assign(K.edges.size(), {-1, -1});
    } else {
        // Directed traversal count per unordered edge detects both
        // non-manifold gluing and orientation conflicts.
        std::map<std::pair<int, int>, std::vector<std::pair<int, bool>>> adj;  // edge -> (cell, forward?)
        for (int t = 0; t < K.num_cells(); ++t) {
            const auto& c = cells[t];
            for (int e = 0; e < 3; ++e) {
                const int a = c[e], b = c[(e + 1) % 3];
                adj[{std::min(a, b), std::max(a, b)}].push_back({t, a < b});
            }
        }
        for (const auto& [key, inc] : adj) {
            if (inc.size() > 2)
                throw NonManifold("edge " + edge_str(key.first, key.second) + " belongs to " +
                                  std::to_string(inc.size()) + " triangles");
            if (inc.size() == 2 && inc[0].second == inc[1].second)
                throw InconsistentOrientation("triangles disagree across shared edge " +
                                              edge_str(key.first, key.second));
        }

        check_vertex_links(K);

        std::set<int> boundary;
        for (const auto& [key, inc] : adj) {
            K.edges.push_back({key.first, key.second});
            if (inc.size() == 1) {
                boundary.insert(key.first);
                boundary.insert(key.second);
            }
        }
        // std::map iterates keys in lexicographic order already.
        K.edge_cells.assign(K.edges.size(), {-1, -1});
        for (std::size_t e = 0; e < K.edges.size(); ++e) {
            const auto& inc = adj[{K.edges[e][0], K.edges[e][1]}];
            for (std::size_t i = 0; i < inc.size(); ++i) K.edge_cells[e][i] = inc[i].first;
        }
        K.boundary_vertices.assign(boundary.begin(), boundary.end());
    }
    return K;
}

namespace {

Eigen::Vector2d circumcenter2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                               const Eigen::Vector2d& c) {
    const Eigen::Vector2d u = b - a, v = c - a;
    const double d = 2.0 * (u.x() * v.y() - u.y() * v.x());
    const double uu = u.squaredNorm(), vv = v.squaredNorm();
    return a + Eigen::Vector2d((v.y() * uu - u.y() * vv) / d, (u.x() * vv - v.x() * uu) / d);
}

}  // namespace

bool is_well_centered(const SimplicialComplex& K, double tol) {
    if (K.dimension == 1) return true;
    for (Index t = 0; t < K.num_cells(); ++t) {
        const auto& c = K.cells[t];
        const Eigen::Vector2d a = K.vertices.row(c[0]), b = K.vertices.row(c[1]),
                              p = K.vertices.row(c[2]);
        const Eigen::Vector2d cc = circumcenter2d(a, b, p);
        const double total = signed_area(a, b, p);
        const double la = signed_area(cc, b, p) / total;
        const double lb = signed_area(a, cc, p) / total;
        const double lc = signed_area(a, b, cc) / total;
        if (!(std::min({la, lb, lc}) >= tol)) return false;
    }
    return true;
}

SimplicialComplex interval_mesh(int n_v, double length) {
    if (n_v < 2) throw ValidationError("interval mesh needs at least 2 vertices");
    if (!(length > 0.0)) throw ValidationError("interval length must be positive");
    Matrix vertices(n_v, 1);
    for (int i = 0; i < n_v; ++i) vertices(i, 0) = length * i / (n_v - 1);
    std::vector<std::vector<int>> cells;
    for (int i = 0; i + 1 < n_v; ++i) cells.push_back({i, i + 1});
    return build_complex(vertices, cells);
}

SimplicialComplex fig1_mesh() {
    const double h = std::sqrt(3.0) / 2.0;
    Matrix vertices(4, 2);
    vertices << 0.0, 0.0,
                1.0, 0.0,
                0.5, h,
                0.5, -h;
    return build_complex(vertices, {{0, 1, 2}, {0, 3, 1}});
}

SimplicialComplex equilateral_strip(int rows, int cols, double side) {
    if (rows < 1 || cols < 1) throw ValidationError("strip needs at least one row and column");
    if (!(side > 0.0)) throw ValidationError("strip side must be positive");
    const double h = side * std::sqrt(3.0) / 2.0;
    const int nx = cols + 1, ny = rows + 1;
    Matrix vertices(nx * ny, 2);
    auto id = [nx](int i, int j) { return i * nx + j; };
    for (int i = 0; i < ny; ++i)
        for (int j = 0; j < nx; ++j)
            vertices.row(id(i, j)) << side * j + 0.5 * side * i, h * i;
    std::vector<std::vector<int>> cells;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            cells.push_back({id(i, j), id(i, j + 1), id(i + 1, j)});
            cells.push_back({id(i, j + 1), id(i + 1, j + 1), id(i + 1, j)});
        }
    }
    return build_complex(vertices, cells);
}

}  // namespace rdnet
