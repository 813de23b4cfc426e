#pragma once

#include <optional>

#include "rdnet/network.hpp"

namespace rdnet {

/** A network in balanced form: a thermodynamic equilibrium x* together
    with the diagonal of balanced reaction constants kappa(x*). */
struct BalancedForm {
    Vector x_star;  // m, strictly positive
    Vector kappa;   // r, strictly positive
};

/** Solve S^T Ln x* = Ln(k_fwd / k_bwd) in least squares and return the
    strictly positive equilibrium with minimum-norm Ln x*.

    Throws NotDetailedBalanced when the residual exceeds tol, i.e. when the
    rate constants admit no positive detailed-balanced equilibrium. */
Vector find_thermodynamic_equilibrium(const ReactionNetwork& net, double tol);

/** kappa_j = k_fwd_j * exp(Z_src_j^T Ln x*), cross-checked against the
    backward expression k_bwd_j * exp(Z_prod_j^T Ln x*) to 1e-10 relative. */
Vector balanced_rate_constants(const ReactionNetwork& net, const Vector& x_star);

/** Bundle x* and kappa. When x_star is not supplied it is derived from the
    conventional rate constants via find_thermodynamic_equilibrium. */
BalancedForm balanced_form(const ReactionNetwork& net,
                           const std::optional<Vector>& x_star = std::nullopt,
                           double tol = 1e-8);

}  // namespace rdnet
