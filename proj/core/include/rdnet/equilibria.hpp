#pragma once

#include <vector>

#include "rdnet/balance.hpp"
#include "rdnet/network.hpp"

namespace rdnet {

/** The set of all thermodynamic equilibria reachable from a reference
    equilibrium x*: E = { x > 0 : S^T Ln x = S^T Ln x* }, together with the
    conserved moieties w spanning ker(S^T). */
struct EquilibriaSet {
    IntMatrix S;                         // m x r, exact
    Vector x_star;                       // reference equilibrium
    std::vector<IntVector> kernel_basis; // moieties, exact integer vectors
};

EquilibriaSet make_equilibria_set(const ReactionNetwork& net, const Vector& x_star);

/** Membership test: ||S^T (Ln x - Ln x*)||_inf <= tol. */
bool is_equilibrium(const Vector& x, const EquilibriaSet& eq, double tol);

/** The unique minimizer of the free energy over the stoichiometric
    compatibility class {x0 + S xi} intersected with the positive orthant.

    Damped Newton on the reduced coordinates with backtracking that keeps
    every iterate strictly positive. On return the stationarity residual
    ||S^T Ln(x/x*)||_inf is at most tol and all moiety values w^T x equal
    w^T x0 up to the arithmetic of the updates. Throws NoConvergence after
    max_iters iterations. */
Vector compute_limit_point(const Vector& x0, const EquilibriaSet& eq, double tol = 1e-10,
                           int max_iters = 200);

}  // namespace rdnet
