#include "rdnet/balance.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <string>

namespace rdnet {

// Tolerance for the forward/backward agreement of each balanced constant.
// S is exact integer data, so double precision leaves ample headroom.
static constexpr double kDetailedBalanceRelTol = 1e-10;

Vector find_thermodynamic_equilibrium(const ReactionNetwork& net, double tol) {
    const Index m = net.num_species();
    const Index r = net.num_reactions();
    if (r == 0) return Vector::Ones(m);

    const Matrix St = stoichiometric_matrix(net).transpose().cast<double>();
    const Vector rhs = (net.k_fwd.array() / net.k_bwd.array()).log().matrix();

    Eigen::JacobiSVD<Matrix> svd(St, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector log_x = svd.solve(rhs);  // minimum-norm least-squares solution

    const double residual = (St * log_x - rhs).lpNorm<Eigen::Infinity>();
    if (!(residual <= tol))
        throw NotDetailedBalanced(
            "rate constants violate detailed balance: least-squares residual " +
                std::to_string(residual) + " exceeds tolerance " + std::to_string(tol),
            residual);
    return log_x.array().exp();
}

Vector balanced_rate_constants(const ReactionNetwork& net, const Vector& x_star) {
    const Index m = net.num_species();
    const Index r = net.num_reactions();
    if (x_star.size() != m) throw DimensionMismatch("x_star size does not match species count");
    if ((x_star.array() <= 0.0).any())
        throw DomainError("x_star must be strictly positive");

    const Vector log_x = x_star.array().log();
    Vector kappa(r);
    for (Index j = 0; j < r; ++j) {
        const Index src = net.source_complex(j);
        const Index prod = net.product_complex(j);
        const double fwd = net.k_fwd(j) * std::exp(net.complexes.col(src).cast<double>().dot(log_x));
        const double bwd = net.k_bwd(j) * std::exp(net.complexes.col(prod).cast<double>().dot(log_x));
        const double rel = std::abs(fwd - bwd) / std::max(fwd, bwd);
        if (!(rel <= kDetailedBalanceRelTol))
            throw NotDetailedBalanced("reaction " + std::to_string(j) +
                                          ": forward and backward fluxes at x* disagree "
                                          "(relative error " +
                                          std::to_string(rel) + ")",
                                      rel);
        kappa(j) = fwd;
    }
    return kappa;
}

BalancedForm balanced_form(const ReactionNetwork& net, const std::optional<Vector>& x_star,
                           double tol) {
    BalancedForm bf;
    bf.x_star = x_star ? *x_star : find_thermodynamic_equilibrium(net, tol);
    bf.kappa = balanced_rate_constants(net, bf.x_star);
    return bf;
}

}  // namespace rdnet
