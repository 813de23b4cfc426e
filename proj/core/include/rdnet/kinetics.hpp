#pragma once

#include "rdnet/balance.hpp"
#include "rdnet/network.hpp"

namespace rdnet {

/** Balanced mass-action vector field

        xdot = -Z B K(x*) B^T Exp(Z^T Ln(x / x*)),

    with Exp and Ln acting componentwise. Throws DomainError unless x is
    strictly positive. */
Vector reaction_vector_field(const ReactionNetwork& net, const BalancedForm& bf,
                             const Vector& x);

/** G(x) = x^T Ln(x/x*) + (x* - x)^T 1. Nonnegative, zero only at x = x*. */
double gibbs_free_energy(const Vector& x, const Vector& x_star);

/** Gradient of the free energy: Ln(x/x*) componentwise. */
Vector gibbs_gradient(const Vector& x, const Vector& x_star);

/** Shared positivity guard: throws DomainError if any component of x <= 0. */
void require_positive(const Vector& x, const char* what);

}  // namespace rdnet
