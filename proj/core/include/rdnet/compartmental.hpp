#pragma once

#include "rdnet/dual_mesh.hpp"
#include "rdnet/equilibria.hpp"
#include "rdnet/kinetics.hpp"
#include "rdnet/operators.hpp"

namespace rdnet {

/** The compartmental reaction-diffusion system on a simplicial complex.

    Each mesh vertex carries one copy of the reaction kinetics; compartments
    are coupled through the diffusion Laplacian acting on the disagreement
    vector X/X*. The state X is compartment-major: X = (x^1; ...; x^N). */
struct CompartmentalSystem {
    ReactionNetwork net;
    BalancedForm bf;
    SimplicialComplex mesh;
    DualComplex dual;
    Operators ops;

    Index m = 0;   // species per compartment
    Index N = 0;   // compartments
    Index N_b = 0; // boundary sites

    SparseMatrix delta;    // Delta_d, mN x mN (assembled form)
    Vector edge_weights;   // star1_e * D_i per (edge, species); the right-hand
                           // sides apply Delta_d in factored edgewise form so
                           // spatially uniform states are annihilated exactly
    Vector x_star_rep;     // X*, x* replicated per compartment
    Vector inv_star0_rep;  // 1/|*v_j| replicated per species slot

    Index state_size() const { return m * N; }
    Index boundary_size() const { return m * N_b; }

    /** View of compartment j inside a state vector. */
    Eigen::VectorBlock<const Vector> block(const Vector& X, Index j) const {
        return X.segment(j * m, m);
    }
};

/** Precompute the coupled system. The overload without an explicit
    diffusion vector uses net.diffusion. Diffusion coefficients are
    per-species and replicated over edges (constant R_d). */
CompartmentalSystem assemble(const ReactionNetwork& net, const BalancedForm& bf,
                             const SimplicialComplex& mesh);
CompartmentalSystem assemble(const ReactionNetwork& net, const BalancedForm& bf,
                             const SimplicialComplex& mesh, const Vector& diffusion);

/** Blockwise reaction field F(X) = (f(x^1); ...; f(x^N)). */
Vector reaction_field_all(const CompartmentalSystem& sys, const Vector& X);

/** Componentwise disagreement X/X*. */
Vector disagreement(const CompartmentalSystem& sys, const Vector& X);

struct OpenRhs {
    Vector x_dot;
    Vector e_b;
};

/** Open model:
        Xdot = -(star0^-1 (x) I_m)(Delta_d X/X* - (tr (x) I_m)^T f_hat_b) + F(X)
        e_b  = (tr (x) I_m) X/X*.                                             */
OpenRhs open_rhs(const CompartmentalSystem& sys, const Vector& X, const Vector& f_hat_b);

/** Closed model: the open model under zero-flux boundary conditions. */
Vector closed_rhs(const CompartmentalSystem& sys, const Vector& X);

/** Total free energy G_d(X) = sum_j G(x^j) |*v_j|. */
double total_energy(const CompartmentalSystem& sys, const Vector& X);

/** Dual-volume weighted moiety total M_w(X) = sum_j |*v_j| w^T x^j. */
double total_moiety(const CompartmentalSystem& sys, const IntVector& w, const Vector& X);

/** Dual-volume weighted mean compartment state (an m-vector). */
Vector weighted_mean_state(const CompartmentalSystem& sys, const Vector& X);

/** Consensus monitor: max over species and compartments of
    |x^j_i/x*_i - mean_j(x^j_i/x*_i)|. Zero iff spatially uniform. */
double consensus_spread(const CompartmentalSystem& sys, const Vector& X);

}  // namespace rdnet
