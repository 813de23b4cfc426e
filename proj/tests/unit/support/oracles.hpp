// Independent oracles for the test suites. Everything here sticks to
// first-principles formulas (conventional mass action, finite differences,
// shoelace areas, fixed-step RK4) so the checks cannot share a code path
// with the implementations they judge.
#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "rdnet/network.hpp"

namespace oracles {

using rdnet::Index;
using rdnet::IntMatrix;
using rdnet::Matrix;
using rdnet::ReactionNetwork;
using rdnet::Vector;

// Conventional reversible mass action:
//   xdot = sum_j S_j (k_fwd_j prod_i x_i^Z(i,src_j) - k_bwd_j prod_i x_i^Z(i,prod_j))
inline Vector conventional_mass_action(const ReactionNetwork& net, const Vector& x) {
    const Index m = net.num_species();
    Vector xdot = Vector::Zero(m);
    for (Index j = 0; j < net.num_reactions(); ++j) {
        const Index src = net.source_complex(j);
        const Index prod = net.product_complex(j);
        double fwd = net.k_fwd(j), bwd = net.k_bwd(j);
        for (Index i = 0; i < m; ++i) {
            for (int p = 0; p < net.complexes(i, src); ++p) fwd *= x(i);
            for (int p = 0; p < net.complexes(i, prod); ++p) bwd *= x(i);
        }
        const double rate = fwd - bwd;
        for (Index i = 0; i < m; ++i)
            xdot(i) += (net.complexes(i, prod) - net.complexes(i, src)) * rate;
    }
    return xdot;
}

// Scale of the fluxes entering the field; the natural denominator for a
// relative comparison of two algebraically equal expressions.
inline double flux_scale(const ReactionNetwork& net, const Vector& x) {
    double scale = 0.0;
    for (Index j = 0; j < net.num_reactions(); ++j) {
        const Index src = net.source_complex(j);
        const Index prod = net.product_complex(j);
        double fwd = net.k_fwd(j), bwd = net.k_bwd(j);
        for (Index i = 0; i < net.num_species(); ++i) {
            for (int p = 0; p < net.complexes(i, src); ++p) fwd *= x(i);
            for (int p = 0; p < net.complexes(i, prod); ++p) bwd *= x(i);
        }
        scale += fwd + bwd;
    }
    return std::max(scale, 1.0);
}

inline Vector central_difference_gradient(const std::function<double(const Vector&)>& f,
                                          const Vector& x, double step = 1e-5) {
    Vector grad(x.size());
    for (Index i = 0; i < x.size(); ++i) {
        Vector hi = x, lo = x;
        hi(i) += step;
        lo(i) -= step;
        grad(i) = (f(hi) - f(lo)) / (2.0 * step);
    }
    return grad;
}

// Classic fixed-step RK4, used as an integrator-independent reference for
// small reaction ODEs.
inline Vector rk4(const std::function<Vector(const Vector&)>& f, Vector x, double t_end,
                  int steps) {
    const double h = t_end / steps;
    for (int s = 0; s < steps; ++s) {
        const Vector k1 = f(x);
        const Vector k2 = f(x + 0.5 * h * k1);
        const Vector k3 = f(x + 0.5 * h * k2);
        const Vector k4 = f(x + h * k3);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return x;
}

inline double shoelace_triangle(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                                const Eigen::Vector2d& c) {
    return 0.5 * std::abs(a.x() * (b.y() - c.y()) + b.x() * (c.y() - a.y()) +
                          c.x() * (a.y() - b.y()));
}

// --- canned networks ---

// A <-> B with k_fwd = 2, k_bwd = 1; equilibria satisfy x_B = 2 x_A.
inline ReactionNetwork ab_network(double diff_a = 1.0, double diff_b = 1.0) {
    ReactionNetwork net;
    net.species = {"A", "B"};
    net.complexes = IntMatrix::Identity(2, 2);
    net.incidence = IntMatrix(2, 1);
    net.incidence << -1, 1;
    net.k_fwd = Vector::Constant(1, 2.0);
    net.k_bwd = Vector::Constant(1, 1.0);
    net.diffusion = Vector(2);
    net.diffusion << diff_a, diff_b;
    return net;
}

// 2A <-> B.
inline ReactionNetwork dimer_network() {
    ReactionNetwork net;
    net.species = {"A", "B"};
    net.complexes = IntMatrix(2, 2);
    net.complexes << 2, 0, 0, 1;
    net.incidence = IntMatrix(2, 1);
    net.incidence << -1, 1;
    net.k_fwd = Vector::Constant(1, 1.0);
    net.k_bwd = Vector::Constant(1, 4.0);
    net.diffusion = Vector::Ones(2);
    return net;
}

// A <-> B <-> C <-> A; loop_gain multiplies k_fwd of the closing reaction,
// so loop_gain != 1 breaks the Wegscheider condition.
inline ReactionNetwork cycle_network(double loop_gain) {
    ReactionNetwork net;
    net.species = {"A", "B", "C"};
    net.complexes = IntMatrix::Identity(3, 3);
    net.incidence = IntMatrix(3, 3);
    net.incidence << -1, 0, 1,
                      1, -1, 0,
                      0, 1, -1;
    net.k_fwd = Vector::Ones(3);
    net.k_fwd(2) = loop_gain;
    net.k_bwd = Vector::Ones(3);
    net.diffusion = Vector::Ones(3);
    return net;
}

// Single species, no reactions: the pure-diffusion carrier (F == 0).
inline ReactionNetwork inert_species_network(double diff = 1.0) {
    ReactionNetwork net;
    net.species = {"U"};
    net.complexes = IntMatrix::Ones(1, 1);
    net.incidence = IntMatrix(1, 0);
    net.k_fwd = Vector(0);
    net.k_bwd = Vector(0);
    net.diffusion = Vector::Constant(1, diff);
    return net;
}

// Random reversible network with rates synthesized to be detailed balanced:
// pick kappa and x*, then back out k_fwd, k_bwd. Returns the network with
// the (x*, kappa) pair that generated it.
struct SynthesizedNetwork {
    ReactionNetwork net;
    Vector x_star;
    Vector kappa;
};

inline SynthesizedNetwork random_balanced_network(std::mt19937& rng) {
    std::uniform_int_distribution<int> m_dist(1, 4), c_dist(2, 4), r_dist(1, 4),
        coeff_dist(0, 2);
    std::uniform_real_distribution<double> value_dist(0.5, 2.0);

    SynthesizedNetwork out;
    ReactionNetwork& net = out.net;
    const int m = m_dist(rng), c = c_dist(rng), r = r_dist(rng);
    for (int i = 0; i < m; ++i) net.species.push_back("S" + std::to_string(i));

    net.complexes = IntMatrix::Zero(m, c);
    for (int rho = 0; rho < c; ++rho) {
        do {
            for (int i = 0; i < m; ++i) net.complexes(i, rho) = coeff_dist(rng);
        } while (net.complexes.col(rho).isZero());
    }

    net.incidence = IntMatrix::Zero(c, r);
    std::uniform_int_distribution<int> complex_dist(0, c - 1);
    for (int j = 0; j < r; ++j) {
        int src = complex_dist(rng), prod = complex_dist(rng);
        while (prod == src) prod = complex_dist(rng);
        net.incidence(src, j) = -1;
        net.incidence(prod, j) = 1;
    }

    out.x_star = Vector::NullaryExpr(m, [&]() { return value_dist(rng); });
    out.kappa = Vector::NullaryExpr(r, [&]() { return value_dist(rng); });
    const Vector log_x = out.x_star.array().log();
    net.k_fwd.resize(r);
    net.k_bwd.resize(r);
    for (int j = 0; j < r; ++j) {
        const Index src = net.source_complex(j);
        const Index prod = net.product_complex(j);
        net.k_fwd(j) = out.kappa(j) * std::exp(-net.complexes.col(src).cast<double>().dot(log_x));
        net.k_bwd(j) = out.kappa(j) * std::exp(-net.complexes.col(prod).cast<double>().dot(log_x));
    }
    net.diffusion = Vector::Ones(m);
    return out;
}

inline Vector random_positive(std::mt19937& rng, Index size, double lo = 0.2, double hi = 5.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return Vector::NullaryExpr(size, [&]() { return dist(rng); });
}

}  // namespace oracles
