#include "rdnet/equilibria.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <string>

#include "rdnet/integer_kernel.hpp"
#include "rdnet/kinetics.hpp"

namespace rdnet {

EquilibriaSet make_equilibria_set(const ReactionNetwork& net, const Vector& x_star) {
    require_positive(x_star, "make_equilibria_set");
    EquilibriaSet eq;
    eq.S = stoichiometric_matrix(net);
    eq.x_star = x_star;
    eq.kernel_basis = integer_kernel_basis(eq.S.transpose());
    return eq;
}

bool is_equilibrium(const Vector& x, const EquilibriaSet& eq, double tol) {
    require_positive(x, "is_equilibrium");
    if (x.size() != eq.x_star.size()) throw DimensionMismatch("candidate size mismatch");
    if (eq.S.cols() == 0) return true;
    const Vector diff = x.array().log() - eq.x_star.array().log();
    return (eq.S.cast<double>().transpose() * diff).lpNorm<Eigen::Infinity>() <= tol;
}

Vector compute_limit_point(const Vector& x0, const EquilibriaSet& eq, double tol,
                           int max_iters) {
    require_positive(x0, "compute_limit_point");
    if (x0.size() != eq.x_star.size()) throw DimensionMismatch("x0 size mismatch");

    const Matrix St = eq.S.cast<double>().transpose();

    // Reduced coordinates: a basis of im(S) from the exact pivot columns,
    // so conservation holds by construction of the iteration.
    const std::vector<Index> piv = pivot_columns(eq.S);
    const Index k = static_cast<Index>(piv.size());
    Matrix U(x0.size(), k);
    for (Index i = 0; i < k; ++i) U.col(i) = eq.S.col(piv[i]).cast<double>();

    Vector x = x0;
    double residual = 0.0;
    for (int iter = 0; iter <= max_iters; ++iter) {
        const Vector grad_full = (x.array() / eq.x_star.array()).log();
        residual = eq.S.cols() == 0 ? 0.0 : (St * grad_full).lpNorm<Eigen::Infinity>();
        if (residual <= tol) return x;

        const Vector grad = U.transpose() * grad_full;
        const Matrix hess = U.transpose() * (x.array().inverse().matrix().asDiagonal() * U);
        const Vector delta = hess.llt().solve(-grad);
        const Vector step = U * delta;

        // Backtrack to stay strictly positive, then to decrease the energy.
        // The sufficient-decrease test only applies while the predicted
        // decrease is resolvable in double precision; beyond that point the
        // pure Newton step is a local contraction and safe to take.
        const double g0 = gibbs_free_energy(x, eq.x_star);
        const double slope = grad.dot(delta);
        double t = 1.0;
        while (t > 1e-16 && ((x + t * step).array() <= 0.0).any()) t *= 0.5;
        if (-slope > 1e-12 * std::max(1.0, std::abs(g0))) {
            while (t > 1e-16 &&
                   gibbs_free_energy(x + t * step, eq.x_star) > g0 + 1e-4 * t * slope)
                t *= 0.5;
        }
        if (t <= 1e-16)
            throw NoConvergence("compute_limit_point: line search failed", iter, residual);
        x += t * step;
    }
    throw NoConvergence("compute_limit_point: no convergence after " +
                            std::to_string(max_iters) + " iterations",
                        max_iters, residual);
}

}  // namespace rdnet
