#include "rdnet/integrate.hpp"

#include <Eigen/SparseLU>
#include <cmath>
#include <string>

namespace rdnet {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kShrinkMin = 0.2;
constexpr double kGrowMax = 5.0;

bool strictly_positive(const Vector& x) { return (x.array() > 0.0).all(); }

double error_norm(const Vector& err, const Vector& x_old, const Vector& x_new, double rtol,
                  double atol) {
    double sum = 0.0;
    for (Index i = 0; i < err.size(); ++i) {
        const double sc = atol + rtol * std::max(std::abs(x_old(i)), std::abs(x_new(i)));
        const double q = err(i) / sc;
        sum += q * q;
    }
    return std::sqrt(sum / static_cast<double>(err.size()));
}

void validate_config(const IntegratorConfig& cfg) {
    if (!(cfg.rtol > 0.0) || !(cfg.atol > 0.0))
        throw ValidationError("integrator tolerances must be positive");
    if (!(cfg.h_min <= cfg.h_init && cfg.h_init <= cfg.h_max))
        throw ValidationError("integrator step bounds must satisfy h_min <= h_init <= h_max");
    if (!(cfg.t_end > 0.0)) throw ValidationError("t_end must be positive");
    if (cfg.max_steps <= 0) throw ValidationError("max_steps must be positive");
}

struct Recorder {
    const CompartmentalSystem& sys;
    Trajectory traj;

    explicit Recorder(const CompartmentalSystem& s) : sys(s) {
        traj.m = s.m;
        traj.N = s.N;
    }

    void sample(double t, const Vector& X, const Vector& x_dot) {
        traj.t.push_back(t);
        traj.X.push_back(X);
        traj.energy.push_back(total_energy(sys, X));
        traj.disagreement.push_back(consensus_spread(sys, X));
        traj.min_concentration.push_back(X.minCoeff());
        traj.deriv_inf.push_back(x_dot.lpNorm<Eigen::Infinity>());
    }
};

using TimeRhs = std::function<Vector(double, const Vector&)>;

// Explicit embedded pair with FSAL. Any stage argument or candidate state
// with a nonpositive component rejects the step and halves h; forward
// invariance of the positive orthant guarantees small enough steps succeed.
Trajectory run_rk45(const CompartmentalSystem& sys, const Vector& X0,
                    const IntegratorConfig& cfg, const TimeRhs& f) {
    Recorder rec(sys);
    double t = 0.0;
    Vector x = X0;
    Vector k1 = f(t, x);
    rec.sample(t, x, k1);

    double h = std::min(cfg.h_init, cfg.t_end);
    bool just_rejected = false;
    Vector k2, k3, k4, k5, k6, k7, x_new, err;

    for (long step = 0; t < cfg.t_end; ++step) {
        if (step >= cfg.max_steps)
            throw MaxStepsExceeded("integration exceeded " + std::to_string(cfg.max_steps) +
                                       " steps at t = " + std::to_string(t),
                                   t);
        const double h_step = std::min(h, cfg.t_end - t);
        if (t + h_step == t)
            throw StepSizeUnderflow("step size vanished at t = " + std::to_string(t), t, h_step);

        const auto reject = [&]() {
            h = 0.5 * h_step;
            just_rejected = true;
            if (h < cfg.h_min)
                throw StepSizeUnderflow("positivity rejection drove h below h_min at t = " +
                                            std::to_string(t),
                                        t, h);
        };

        const auto stage_state = [&](std::initializer_list<std::pair<double, const Vector*>> terms) {
            Vector s = x;
            for (const auto& [coeff, k] : terms) s += (h_step * coeff) * (*k);
            return s;
        };

        Vector s2 = stage_state({{a21, &k1}});
        if (!strictly_positive(s2)) { reject(); continue; }
        k2 = f(t + c2 * h_step, s2);
        Vector s3 = stage_state({{a31, &k1}, {a32, &k2}});
        if (!strictly_positive(s3)) { reject(); continue; }
        k3 = f(t + c3 * h_step, s3);
        Vector s4 = stage_state({{a41, &k1}, {a42, &k2}, {a43, &k3}});
        if (!strictly_positive(s4)) { reject(); continue; }
        k4 = f(t + c4 * h_step, s4);
        Vector s5 = stage_state({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
        if (!strictly_positive(s5)) { reject(); continue; }
        k5 = f(t + c5 * h_step, s5);
        Vector s6 = stage_state({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
        if (!strictly_positive(s6)) { reject(); continue; }
        k6 = f(t + h_step, s6);

        x_new = stage_state({{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
        if (!strictly_positive(x_new)) { reject(); continue; }
        k7 = f(t + h_step, x_new);

        err = h_step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double en = error_norm(err, x, x_new, cfg.rtol, cfg.atol);

        double factor = kSafety * std::pow(std::max(en, 1e-16), -0.2);
        factor = std::min(just_rejected ? 1.0 : kGrowMax, std::max(kShrinkMin, factor));

        if (en <= 1.0) {
            t += h_step;
            x = x_new;
            k1 = k7;  // FSAL
            rec.sample(t, x, k1);
            just_rejected = false;
            h = std::min(cfg.h_max, h_step * factor);
        } else {
            h = h_step * factor;
            just_rejected = true;
            if (h < cfg.h_min)
                throw StepSizeUnderflow("error control drove h below h_min at t = " +
                                            std::to_string(t),
                                        t, h);
        }
    }
    return rec.traj;
}

// One-step IMEX midpoint: the (constant, linear) diffusion map
// L = (star0^-1 (x) I) Delta_d diag(1/X*) is treated implicitly through a
// cached factorization of I + (h/2) L, the reaction explicitly. A forward
// Euler shadow provides the embedded error estimate.
Trajectory run_semi_implicit(const CompartmentalSystem& sys, const Vector& X0,
                             const IntegratorConfig& cfg, const TimeRhs& f_explicit) {
    const Index n = sys.state_size();
    SparseMatrix L = sys.inv_star0_rep.asDiagonal() * sys.delta *
                     sys.x_star_rep.cwiseInverse().asDiagonal();
    SparseMatrix identity(n, n);
    identity.setIdentity();

    Eigen::SparseLU<SparseMatrix> lu;
    double cached_gamma = -1.0;
    const auto factorize = [&](double gamma) {
        if (gamma == cached_gamma) return;
        const SparseMatrix A = identity + gamma * L;
        lu.compute(A);
        if (lu.info() != Eigen::Success)
            throw Error("semi-implicit factorization failed");
        cached_gamma = gamma;
    };

    Recorder rec(sys);
    double t = 0.0;
    Vector x = X0;
    Vector k_full = -(L * x) + f_explicit(t, x);
    rec.sample(t, x, k_full);

    double h = std::min(cfg.h_init, cfg.t_end);
    bool just_rejected = false;

    for (long step = 0; t < cfg.t_end; ++step) {
        if (step >= cfg.max_steps)
            throw MaxStepsExceeded("integration exceeded " + std::to_string(cfg.max_steps) +
                                       " steps at t = " + std::to_string(t),
                                   t);
        const double h_step = std::min(h, cfg.t_end - t);
        if (t + h_step == t)
            throw StepSizeUnderflow("step size vanished at t = " + std::to_string(t), t, h_step);

        const auto reject = [&]() {
            h = 0.5 * h_step;
            just_rejected = true;
            if (h < cfg.h_min)
                throw StepSizeUnderflow("positivity rejection drove h below h_min at t = " +
                                            std::to_string(t),
                                        t, h);
        };

        factorize(0.5 * h_step);
        const Vector x_mid = lu.solve(x + (0.5 * h_step) * f_explicit(t, x));
        if (!strictly_positive(x_mid)) { reject(); continue; }

        const Vector k_mid = -(L * x_mid) + f_explicit(t + 0.5 * h_step, x_mid);
        const Vector x_new = x + h_step * k_mid;
        if (!strictly_positive(x_new)) { reject(); continue; }

        const Vector err = h_step * (k_mid - k_full);
        const double en = error_norm(err, x, x_new, cfg.rtol, cfg.atol);

        double factor = kSafety * std::pow(std::max(en, 1e-16), -0.5);
        factor = std::min(just_rejected ? 1.0 : kGrowMax, std::max(kShrinkMin, factor));

        if (en <= 1.0) {
            t += h_step;
            x = x_new;
            k_full = -(L * x) + f_explicit(t, x);
            rec.sample(t, x, k_full);
            just_rejected = false;
            // Deadband: hold h while the controller is content, so the
            // factorization actually gets reused.
            if (factor > 0.8 && factor < 1.25) factor = 1.0;
            h = std::min(cfg.h_max, h_step * factor);
        } else {
            h = h_step * factor;
            just_rejected = true;
            if (h < cfg.h_min)
                throw StepSizeUnderflow("error control drove h below h_min at t = " +
                                            std::to_string(t),
                                        t, h);
        }
    }
    return rec.traj;
}

Trajectory run(const CompartmentalSystem& sys, const Vector& X0, const IntegratorConfig& cfg,
               const BoundarySchedule* schedule) {
    validate_config(cfg);
    if (X0.size() != sys.state_size())
        throw DimensionMismatch("X0 size does not match the assembled system");
    require_positive(X0, "integrate");

    if (cfg.method == Method::ExplicitRK45) {
        // The reference path evaluates the model equations exactly as stated.
        const TimeRhs f = [&](double t, const Vector& X) {
            if (!schedule) return closed_rhs(sys, X);
            return open_rhs(sys, X, (*schedule)(t)).x_dot;
        };
        return run_rk45(sys, X0, cfg, f);
    }

    // Semi-implicit: only the non-diffusive part is evaluated explicitly.
    const TimeRhs f_explicit = [&](double t, const Vector& X) {
        Vector F = reaction_field_all(sys, X);
        if (schedule) {
            const Vector fb = (*schedule)(t);
            if (fb.size() != sys.boundary_size())
                throw DimensionMismatch("boundary schedule has wrong size");
            for (Index i = 0; i < sys.N_b; ++i) {
                const Index v = sys.mesh.boundary_vertices[i];
                F.segment(v * sys.m, sys.m) +=
                    sys.inv_star0_rep.segment(v * sys.m, sys.m).cwiseProduct(
                        fb.segment(i * sys.m, sys.m));
            }
        }
        return F;
    };
    return run_semi_implicit(sys, X0, cfg, f_explicit);
}

}  // namespace

Trajectory integrate(const CompartmentalSystem& sys, const Vector& X0,
                     const IntegratorConfig& config) {
    return run(sys, X0, config, nullptr);
}

Trajectory integrate_open(const CompartmentalSystem& sys, const Vector& X0,
                          const IntegratorConfig& config, const BoundarySchedule& schedule) {
    if (!schedule) throw ValidationError("boundary schedule is empty");
    return run(sys, X0, config, &schedule);
}

const char* to_string(ConvergenceStatus status) {
    switch (status) {
        case ConvergenceStatus::Running: return "RUNNING";
        case ConvergenceStatus::Consensus: return "CONSENSUS";
        case ConvergenceStatus::NonuniformSteady: return "NONUNIFORM_STEADY";
    }
    return "UNKNOWN";
}

ConvergenceStatus detect_convergence(const Trajectory& traj, double eps_consensus,
                                     double eps_stationary) {
    if (traj.size() == 0) throw ValidationError("detect_convergence: empty trajectory");
    const double tau = std::max(1.0, traj.t.back() - traj.t.front());
    const bool stationary = traj.deriv_inf.back() * tau < eps_stationary;
    if (!stationary) return ConvergenceStatus::Running;
    return traj.disagreement.back() < eps_consensus ? ConvergenceStatus::Consensus
                                                    : ConvergenceStatus::NonuniformSteady;
}

PersistencyReport monitor_persistency(const Trajectory& traj) {
    if (traj.size() == 0) throw ValidationError("monitor_persistency: empty trajectory");
    PersistencyReport report;
    report.min_value = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < traj.size(); ++s) {
        Index arg = 0;
        const double v = traj.X[s].minCoeff(&arg);
        if (v < report.min_value) {
            report.min_value = v;
            report.time = traj.t[s];
            report.compartment = arg / traj.m;
            report.species = arg % traj.m;
        }
    }
    return report;
}

}  // namespace rdnet
