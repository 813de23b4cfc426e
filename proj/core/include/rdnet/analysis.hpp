#pragma once

#include <vector>

#include "rdnet/integrate.hpp"

namespace rdnet {

/** Exact rational basis of ker(S^T): the conserved moieties w with
    w^T S = 0, scaled to coprime integers, deterministically ordered. */
std::vector<IntVector> conserved_moieties(const IntMatrix& S);

/** Everything needed to judge a consensus run: where the simulation ended,
    where convex minimization over the conserved-quantity class of the
    volume-weighted initial mean says it must end, and how well the run
    respected the energy decrease and the conservation laws. */
struct ConsensusReport {
    ConvergenceStatus status = ConvergenceStatus::Running;
    double final_disagreement = 0.0;
    double membership_residual = 0.0;   // ||S^T Ln(x_sim/x*)||_inf
    Vector simulated_limit;             // volume-weighted mean of final blocks
    Vector predicted_limit;             // free-energy minimizer over the class
    double prediction_error = 0.0;      // inf-norm gap between the two
    double lyapunov_violation_max = 0.0;
    std::vector<double> moiety_drift;   // per basis moiety, relative
    double diffusion_alpha = 0.0;       // min diffusion entry backing the claim
    Trajectory trajectory;
};

/** A run ended at t_end without the expected convergence; carries the
    detected status and the report assembled so far. */
class NotConverged : public Error {
public:
    NotConverged(const std::string& what, ConsensusReport report_)
        : Error(what), report(std::move(report_)) {}
    ConsensusReport report;
};

/** Integrate the closed model and check the spatial-consensus prediction:
    the final state must be uniform, a thermodynamic equilibrium, and equal
    to the minimizer of the total free energy over the compatibility class
    of the volume-weighted mean of X0. Requires strictly positive diffusion
    coefficients. Throws NotConverged when the run does not reach consensus. */
ConsensusReport verify_consensus(const CompartmentalSystem& sys, const Vector& X0,
                                 const IntegratorConfig& config, double eps_consensus = 1e-6,
                                 double eps_stationary = 1e-6);

struct LyapunovReport {
    double max_step_increase = 0.0;  // max_i G_d(t_{i+1}) - G_d(t_i)
    double total_decrease = 0.0;     // G_d(t_0) - G_d(t_end)
};

LyapunovReport lyapunov_report(const Trajectory& traj, const CompartmentalSystem& sys);

/** Open-model run under a time-varying boundary flux with the per-species
    spatial variance sum_j |*v_j| (x^j_i - mean_i)^2 recorded at every
    sample as a pattern indicator. */
struct ActuationResult {
    Trajectory trajectory;
    std::vector<Vector> spatial_variance;  // one m-vector per sample
};

ActuationResult boundary_actuation_experiment(const CompartmentalSystem& sys,
                                              const BoundarySchedule& schedule,
                                              const Vector& X0,
                                              const IntegratorConfig& config);

}  // namespace rdnet
