#include "rdnet/compartmental.hpp"

#include <string>

namespace rdnet {

CompartmentalSystem assemble(const ReactionNetwork& net, const BalancedForm& bf,
                             const SimplicialComplex& mesh) {
    return assemble(net, bf, mesh, net.diffusion);
}

CompartmentalSystem assemble(const ReactionNetwork& net, const BalancedForm& bf,
                             const SimplicialComplex& mesh, const Vector& diffusion) {
    validate(net);
    if (diffusion.size() != net.num_species())
        throw DimensionMismatch("diffusion vector must have one entry per species");
    for (Index i = 0; i < diffusion.size(); ++i)
        if (!(diffusion(i) >= 0.0))
            throw DomainError("diffusion coefficients must be nonnegative");

    CompartmentalSystem sys;
    sys.net = net;
    sys.bf = bf;
    sys.mesh = mesh;
    sys.dual = circumcentric_dual(mesh);
    sys.ops = build_operators(mesh, sys.dual);
    sys.m = net.num_species();
    sys.N = mesh.num_vertices();
    sys.N_b = mesh.num_boundary_vertices();

    // R_d: per-species coefficients replicated over edges, edge-major.
    Vector r_d(sys.m * mesh.num_edges());
    for (Index e = 0; e < mesh.num_edges(); ++e)
        r_d.segment(e * sys.m, sys.m) = diffusion;
    sys.delta = laplacian(mesh, sys.ops, r_d);
    sys.edge_weights = r_d;
    for (Index e = 0; e < mesh.num_edges(); ++e)
        sys.edge_weights.segment(e * sys.m, sys.m) *= sys.ops.star1(e);

    sys.x_star_rep.resize(sys.state_size());
    sys.inv_star0_rep.resize(sys.state_size());
    for (Index j = 0; j < sys.N; ++j) {
        sys.x_star_rep.segment(j * sys.m, sys.m) = bf.x_star;
        sys.inv_star0_rep.segment(j * sys.m, sys.m).setConstant(1.0 / sys.ops.star0(j));
    }

    // The Laplacian kernel must contain spatially uniform states.
    const Vector uniform = sys.x_star_rep;
    const double kernel_check = (sys.delta * (uniform.array() / sys.x_star_rep.array()).matrix())
                                    .lpNorm<Eigen::Infinity>();
    if (kernel_check > 1e-9 * (1.0 + sys.delta.coeffs().abs().sum()))
        throw ValidationError("assembled Laplacian does not annihilate uniform states");
    return sys;
}

Vector reaction_field_all(const CompartmentalSystem& sys, const Vector& X) {
    if (X.size() != sys.state_size()) throw DimensionMismatch("state size mismatch");
    Vector F(sys.state_size());
    for (Index j = 0; j < sys.N; ++j) {
        const Vector xj = sys.block(X, j);
        if ((xj.array() <= 0.0).any())
            throw DomainError("compartment " + std::to_string(j) +
                              " has a nonpositive concentration");
        F.segment(j * sys.m, sys.m) = reaction_vector_field(sys.net, sys.bf, xj);
    }
    return F;
}

Vector disagreement(const CompartmentalSystem& sys, const Vector& X) {
    if (X.size() != sys.state_size()) throw DimensionMismatch("state size mismatch");
    require_positive(X, "disagreement");
    return X.array() / sys.x_star_rep.array();
}

namespace {

// Shared path for the open and closed models so that a zero flux vector
// reproduces the closed right-hand side bit for bit. The Laplacian acts in
// its factored form (d (x) I)^T (star1 (x) I) R_d (d (x) I): edge differences
// of a spatially uniform disagreement cancel exactly, so uniform equilibria
// are exact stationary points of the evaluated dynamics.
Vector rhs_impl(const CompartmentalSystem& sys, const Vector& X, const Vector* f_hat_b) {
    const Vector ratio = disagreement(sys, X);
    Vector flux = Vector::Zero(sys.state_size());
    for (std::size_t e = 0; e < sys.mesh.edges.size(); ++e) {
        const Index tail = sys.mesh.edges[e][0];
        const Index head = sys.mesh.edges[e][1];
        for (Index i = 0; i < sys.m; ++i) {
            const double w = sys.edge_weights(static_cast<Index>(e) * sys.m + i);
            if (w == 0.0) continue;
            const double along = w * (ratio(head * sys.m + i) - ratio(tail * sys.m + i));
            flux(head * sys.m + i) += along;
            flux(tail * sys.m + i) -= along;
        }
    }
    if (f_hat_b) {
        if (f_hat_b->size() != sys.boundary_size())
            throw DimensionMismatch("boundary flux must have m entries per boundary vertex");
        // (tr (x) I_m)^T f_hat_b scatters boundary values to their vertices.
        for (Index i = 0; i < sys.N_b; ++i) {
            const Index v = sys.mesh.boundary_vertices[i];
            flux.segment(v * sys.m, sys.m) -= f_hat_b->segment(i * sys.m, sys.m);
        }
    }
    return (-(sys.inv_star0_rep.array() * flux.array())).matrix() + reaction_field_all(sys, X);
}

}  // namespace

OpenRhs open_rhs(const CompartmentalSystem& sys, const Vector& X, const Vector& f_hat_b) {
    OpenRhs out;
    out.x_dot = rhs_impl(sys, X, &f_hat_b);
    const Vector ratio = disagreement(sys, X);
    out.e_b.resize(sys.boundary_size());
    for (Index i = 0; i < sys.N_b; ++i)
        out.e_b.segment(i * sys.m, sys.m) =
            ratio.segment(sys.mesh.boundary_vertices[i] * sys.m, sys.m);
    return out;
}

Vector closed_rhs(const CompartmentalSystem& sys, const Vector& X) {
    return rhs_impl(sys, X, nullptr);
}

double total_energy(const CompartmentalSystem& sys, const Vector& X) {
    if (X.size() != sys.state_size()) throw DimensionMismatch("state size mismatch");
    double g = 0.0;
    for (Index j = 0; j < sys.N; ++j)
        g += sys.ops.star0(j) * gibbs_free_energy(sys.block(X, j), sys.bf.x_star);
    return g;
}

double total_moiety(const CompartmentalSystem& sys, const IntVector& w, const Vector& X) {
    if (w.size() != sys.m) throw DimensionMismatch("moiety size mismatch");
    double total = 0.0;
    for (Index j = 0; j < sys.N; ++j)
        total += sys.ops.star0(j) * w.cast<double>().dot(sys.block(X, j));
    return total;
}

Vector weighted_mean_state(const CompartmentalSystem& sys, const Vector& X) {
    Vector mean = Vector::Zero(sys.m);
    for (Index j = 0; j < sys.N; ++j) mean += sys.ops.star0(j) * sys.block(X, j);
    return mean / sys.dual.total_volume;
}

double consensus_spread(const CompartmentalSystem& sys, const Vector& X) {
    const Vector ratio = disagreement(sys, X);
    double spread = 0.0;
    for (Index i = 0; i < sys.m; ++i) {
        double mean = 0.0;
        for (Index j = 0; j < sys.N; ++j) mean += ratio(j * sys.m + i);
        mean /= static_cast<double>(sys.N);
        for (Index j = 0; j < sys.N; ++j)
            spread = std::max(spread, std::abs(ratio(j * sys.m + i) - mean));
    }
    return spread;
}

}  // namespace rdnet
