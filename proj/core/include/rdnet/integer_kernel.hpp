#pragma once

#include <vector>

#include "rdnet/types.hpp"

namespace rdnet {

/** Basis of ker(A) for an integer matrix A, computed in exact rational
    arithmetic and scaled back to coprime integer vectors.

    Basis vectors come from the reduced row echelon form of A, one per free
    column in ascending column order, each with its lowest-index nonzero
    entry positive. The result is therefore deterministic for a given A. */
std::vector<IntVector> integer_kernel_basis(const IntMatrix& A);

/** Indices of a maximal set of linearly independent columns of A
    (the pivot columns of its RREF), in ascending order. */
std::vector<Index> pivot_columns(const IntMatrix& A);

/** Rank of an integer matrix, exact. */
Index integer_rank(const IntMatrix& A);

}  // namespace rdnet
