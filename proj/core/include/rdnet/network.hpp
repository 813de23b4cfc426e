#pragma once

#include <string>
#include <vector>

#include "rdnet/errors.hpp"
#include "rdnet/types.hpp"

namespace rdnet {

/** A reversible mass-action reaction network.

    Species enter reactions only through complexes: column rho of the
    complex stoichiometric matrix Z lists how many units of each species
    make up complex rho. The incidence matrix B wires complexes into
    reactions, one column per reaction with -1 at the source complex and
    +1 at the product complex. Conventional forward/backward rate
    constants and per-species diffusion coefficients complete the data. */
struct ReactionNetwork {
    std::vector<std::string> species;  // m labels
    IntMatrix complexes;               // Z, m x c, nonnegative entries
    IntMatrix incidence;               // B, c x r, one -1 and one +1 per column
    Vector k_fwd;                      // r, strictly positive
    Vector k_bwd;                      // r, strictly positive
    Vector diffusion;                  // m, nonnegative

    Index num_species() const { return complexes.rows(); }
    Index num_complexes() const { return complexes.cols(); }
    Index num_reactions() const { return incidence.cols(); }

    /** Row index of the -1 entry in column j of B. */
    Index source_complex(Index j) const;
    /** Row index of the +1 entry in column j of B. */
    Index product_complex(Index j) const;
};

/** Check every structural invariant; throws ValidationError naming the
    first violated one. */
void validate(const ReactionNetwork& net);

/** S = Z B, computed in exact integer arithmetic. m x r. */
IntMatrix stoichiometric_matrix(const ReactionNetwork& net);

}  // namespace rdnet
