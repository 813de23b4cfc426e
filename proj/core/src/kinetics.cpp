#include "rdnet/kinetics.hpp"

namespace rdnet {

void require_positive(const Vector& x, const char* what) {
    for (Index i = 0; i < x.size(); ++i)
        if (!(x(i) > 0.0))
            throw DomainError(std::string(what) + ": component " + std::to_string(i) +
                              " is not strictly positive");
}

Vector reaction_vector_field(const ReactionNetwork& net, const BalancedForm& bf,
                             const Vector& x) {
    require_positive(x, "reaction_vector_field");
    if (x.size() != net.num_species())
        throw DimensionMismatch("state size does not match species count");

    const Vector log_ratio = (x.array() / bf.x_star.array()).log();
    const Vector complex_activity =
        (net.complexes.cast<double>().transpose() * log_ratio).array().exp();
    const Vector reaction_flux =
        bf.kappa.asDiagonal() * (net.incidence.cast<double>().transpose() * complex_activity);
    return -(net.complexes.cast<double>() * (net.incidence.cast<double>() * reaction_flux));
}

double gibbs_free_energy(const Vector& x, const Vector& x_star) {
    require_positive(x, "gibbs_free_energy");
    if (x.size() != x_star.size()) throw DimensionMismatch("x and x_star sizes differ");
    return x.dot((x.array() / x_star.array()).log().matrix()) + (x_star - x).sum();
}

Vector gibbs_gradient(const Vector& x, const Vector& x_star) {
    require_positive(x, "gibbs_gradient");
    if (x.size() != x_star.size()) throw DimensionMismatch("x and x_star sizes differ");
    return (x.array() / x_star.array()).log();
}

}  // namespace rdnet
