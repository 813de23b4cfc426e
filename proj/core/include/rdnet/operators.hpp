#pragma once

#include "rdnet/dual_mesh.hpp"
#include "rdnet/mesh.hpp"

namespace rdnet {

/** Discrete operators of a complex: diagonal Hodge stars, the exterior
    derivative on 0-cochains, and the boundary trace. */
struct Operators {
    Vector star0;       // N, |*_i v_k| / |v_k| with |v_k| = 1
    Vector star1;       // N_e, |*_i sigma^1_k| / |sigma^1_k|
    SparseMatrix d;     // N_e x N, one +1 (head) and one -1 (tail) per row
    SparseMatrix trace; // N_b x N, selects boundary vertices in ascending order
};

Vector hodge_star_0(const SimplicialComplex& K, const DualComplex& dual);
Vector hodge_star_1(const SimplicialComplex& K, const DualComplex& dual);
SparseMatrix exterior_derivative_0(const SimplicialComplex& K);
SparseMatrix trace_operator(const SimplicialComplex& K);

Operators build_operators(const SimplicialComplex& K, const DualComplex& dual);

/** Diffusion Laplacian

        Delta_d = (d (x) I_m)^T (star1 (x) I_m) R_d (d (x) I_m),

    an mN x mN symmetric positive semidefinite matrix in compartment-major
    layout (X = (x^1; ...; x^N)). r_d_diag is the diagonal of R_d, one entry
    per (edge, species) pair in edge-major order; m is inferred from its
    size. Throws DimensionMismatch when the size is not a multiple of N_e. */
SparseMatrix laplacian(const SimplicialComplex& K, const Operators& ops,
                       const Vector& r_d_diag);

}  // namespace rdnet
