#include "rdnet/network.hpp"

#include <cmath>
#include <string>

namespace rdnet {

namespace {

std::string at(const char* what, Index idx) {
    return std::string(what) + " " + std::to_string(idx);
}

}  // namespace

Index ReactionNetwork::source_complex(Index j) const {
    for (Index rho = 0; rho < incidence.rows(); ++rho)
        if (incidence(rho, j) == -1) return rho;
    throw ValidationError(at("reaction", j) + ": no source complex in incidence column");
}

Index ReactionNetwork::product_complex(Index j) const {
    for (Index rho = 0; rho < incidence.rows(); ++rho)
        if (incidence(rho, j) == 1) return rho;
    throw ValidationError(at("reaction", j) + ": no product complex in incidence column");
}

void validate(const ReactionNetwork& net) {
    const Index m = net.complexes.rows();
    const Index c = net.complexes.cols();
    const Index r = net.incidence.cols();

    if (m == 0) throw ValidationError("network has no species");
    if (static_cast<Index>(net.species.size()) != m)
        throw ValidationError("species label count does not match rows of Z");
    if (net.incidence.rows() != c)
        throw ValidationError("incidence row count does not match number of complexes");
    if (net.k_fwd.size() != r || net.k_bwd.size() != r)
        throw ValidationError("rate constant vectors must have one entry per reaction");
    if (net.diffusion.size() != m)
        throw ValidationError("diffusion vector must have one entry per species");

    for (Index rho = 0; rho < c; ++rho) {
        bool nonzero = false;
        for (Index i = 0; i < m; ++i) {
            if (net.complexes(i, rho) < 0)
                throw ValidationError(at("complex", rho) + ": negative stoichiometric coefficient");
            nonzero = nonzero || net.complexes(i, rho) != 0;
        }
        if (!nonzero)
            throw ValidationError(at("complex", rho) + ": empty complex (zero column of Z) is not supported");
    }

    for (Index j = 0; j < r; ++j) {
        int plus = 0, minus = 0;
        for (Index rho = 0; rho < c; ++rho) {
            const int b = net.incidence(rho, j);
            if (b == 1)
                ++plus;
            else if (b == -1)
                ++minus;
            else if (b != 0)
                throw ValidationError(at("reaction", j) + ": incidence entries must be -1, 0, or +1");
        }
        if (plus != 1 || minus != 1)
            throw ValidationError(at("reaction", j) +
                                  ": incidence column must have exactly one -1 and one +1");
        if (!(net.k_fwd(j) > 0.0) || !std::isfinite(net.k_fwd(j)))
            throw ValidationError(at("reaction", j) + ": k_fwd must be strictly positive");
        if (!(net.k_bwd(j) > 0.0) || !std::isfinite(net.k_bwd(j)))
            throw ValidationError(at("reaction", j) + ": k_bwd must be strictly positive");
    }

    for (Index i = 0; i < m; ++i)
        if (!(net.diffusion(i) >= 0.0) || !std::isfinite(net.diffusion(i)))
            throw ValidationError(at("species", i) + ": diffusion coefficient must be nonnegative");
}

IntMatrix stoichiometric_matrix(const ReactionNetwork& net) {
    return net.complexes * net.incidence;
}

}  // namespace rdnet
