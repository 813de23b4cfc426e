#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "rdnet/compartmental.hpp"

namespace rdnet {

enum class Method {
    ExplicitRK45,           // embedded Dormand-Prince 5(4), the reference path
    SemiImplicitDiffusion,  // linear diffusion implicit, reaction explicit
};

/** Step-size policy: any trial step whose stages or result leave the open
    positive orthant is rejected and the step halved, so stored states are
    strictly positive by construction. */
struct IntegratorConfig {
    Method method = Method::ExplicitRK45;
    double rtol = 1e-8;
    double atol = 1e-10;
    double h_init = 1e-3;
    double h_min = 1e-12;
    double h_max = std::numeric_limits<double>::infinity();
    double t_end = 10.0;
    long max_steps = 1'000'000;
};

enum class TerminationReason { ReachedTEnd };

/** Time series of the concatenated state with runtime monitors sampled at
    every accepted step. */
struct Trajectory {
    Index m = 0;
    Index N = 0;
    std::vector<double> t;
    std::vector<Vector> X;
    std::vector<double> energy;             // G_d
    std::vector<double> disagreement;       // consensus spread
    std::vector<double> min_concentration;  // min over components
    std::vector<double> deriv_inf;          // ||Xdot||_inf
    TerminationReason termination = TerminationReason::ReachedTEnd;

    std::size_t size() const { return t.size(); }
};

/** Time-dependent boundary flux cochain, one m-block per boundary vertex. */
using BoundarySchedule = std::function<Vector(double)>;

/** Integrate the closed model from a strictly positive X0 to t_end.
    Throws StepSizeUnderflow or MaxStepsExceeded on failure. */
Trajectory integrate(const CompartmentalSystem& sys, const Vector& X0,
                     const IntegratorConfig& config);

/** Integrate the open model under the given boundary flux schedule. */
Trajectory integrate_open(const CompartmentalSystem& sys, const Vector& X0,
                          const IntegratorConfig& config, const BoundarySchedule& schedule);

enum class ConvergenceStatus { Running, Consensus, NonuniformSteady };

const char* to_string(ConvergenceStatus status);

/** Classify the end of a run: Consensus when the disagreement spread is
    below eps_consensus and the state is stationary (||Xdot||_inf times the
    characteristic time max(1, t span) below eps_stationary);
    NonuniformSteady when stationary but not uniform; Running otherwise. */
ConvergenceStatus detect_convergence(const Trajectory& traj, double eps_consensus,
                                     double eps_stationary);

/** Empirical persistency bound: the smallest concentration ever stored,
    with the sample time and (compartment, species) location of the dip. */
struct PersistencyReport {
    double min_value = 0.0;
    double time = 0.0;
    Index compartment = 0;
    Index species = 0;
};

PersistencyReport monitor_persistency(const Trajectory& traj);

}  // namespace rdnet
