#include "rdnet/analysis.hpp"

#include <cmath>
#include <string>

#include "rdnet/integer_kernel.hpp"

namespace rdnet {

std::vector<IntVector> conserved_moieties(const IntMatrix& S) {
    return integer_kernel_basis(S.transpose());
}

namespace {

Vector spatial_variance(const CompartmentalSystem& sys, const Vector& X) {
    const Vector mean = weighted_mean_state(sys, X);
    Vector var = Vector::Zero(sys.m);
    for (Index j = 0; j < sys.N; ++j) {
        const Vector dev = sys.block(X, j) - mean;
        var += sys.ops.star0(j) * dev.cwiseAbs2();
    }
    return var;
}

}  // namespace

ConsensusReport verify_consensus(const CompartmentalSystem& sys, const Vector& X0,
                                 const IntegratorConfig& config, double eps_consensus,
                                 double eps_stationary) {
    require_positive(X0, "verify_consensus");

    ConsensusReport report;
    report.diffusion_alpha = sys.net.diffusion.minCoeff();
    report.trajectory = integrate(sys, X0, config);
    report.status = detect_convergence(report.trajectory, eps_consensus, eps_stationary);
    report.final_disagreement = report.trajectory.disagreement.back();

    const EquilibriaSet eq = make_equilibria_set(sys.net, sys.bf.x_star);
    const Vector& x_final = report.trajectory.X.back();
    report.simulated_limit = weighted_mean_state(sys, x_final);
    report.membership_residual =
        eq.S.cols() == 0
            ? 0.0
            : (eq.S.cast<double>().transpose() *
               (report.simulated_limit.array().log() - eq.x_star.array().log()).matrix())
                  .lpNorm<Eigen::Infinity>();

    // Prediction: minimize G over the class of the volume-weighted mean of
    // X0; conservation transports the mean's moieties to the uniform limit.
    const Vector x_hat = weighted_mean_state(sys, X0);
    report.predicted_limit = compute_limit_point(x_hat, eq);
    report.prediction_error =
        (report.simulated_limit - report.predicted_limit).lpNorm<Eigen::Infinity>();

    const LyapunovReport lyap = lyapunov_report(report.trajectory, sys);
    report.lyapunov_violation_max = std::max(0.0, lyap.max_step_increase);

    for (const IntVector& w : eq.kernel_basis) {
        const double m0 = total_moiety(sys, w, X0);
        const double m1 = total_moiety(sys, w, x_final);
        report.moiety_drift.push_back(std::abs(m1 - m0) / std::max(1.0, std::abs(m0)));
    }

    if (!(report.diffusion_alpha > 0.0))
        throw NotConverged("consensus requires strictly positive diffusion (alpha = " +
                               std::to_string(report.diffusion_alpha) + "); run ended " +
                               to_string(report.status),
                           std::move(report));
    if (report.status != ConvergenceStatus::Consensus)
        throw NotConverged(std::string("run ended ") + to_string(report.status) +
                               " at t_end without reaching consensus",
                           std::move(report));
    return report;
}

LyapunovReport lyapunov_report(const Trajectory& traj, const CompartmentalSystem& sys) {
    if (traj.size() == 0) throw ValidationError("lyapunov_report: empty trajectory");
    LyapunovReport rep;
    rep.max_step_increase = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < traj.size(); ++i)
        rep.max_step_increase = std::max(rep.max_step_increase,
                                         traj.energy[i + 1] - traj.energy[i]);
    if (traj.size() == 1) rep.max_step_increase = 0.0;
    rep.total_decrease = total_energy(sys, traj.X.front()) - total_energy(sys, traj.X.back());
    return rep;
}

ActuationResult boundary_actuation_experiment(const CompartmentalSystem& sys,
                                              const BoundarySchedule& schedule,
                                              const Vector& X0,
                                              const IntegratorConfig& config) {
    ActuationResult result;
    result.trajectory = integrate_open(sys, X0, config, schedule);
    result.spatial_variance.reserve(result.trajectory.size());
    for (const Vector& X : result.trajectory.X)
        result.spatial_variance.push_back(spatial_variance(sys, X));
    return result;
}

}  // namespace rdnet
