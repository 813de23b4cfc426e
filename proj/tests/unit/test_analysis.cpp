#include <doctest.h>

#include <cmath>
#include <random>

#include "rdnet/analysis.hpp"
#include "support/oracles.hpp"

using namespace rdnet;

namespace {

CompartmentalSystem ab_on_fig1(double diff_a = 1.0, double diff_b = 1.0) {
    const ReactionNetwork net = oracles::ab_network(diff_a, diff_b);
    Vector x_star(2);
    x_star << 1.0, 2.0;
    return assemble(net, balanced_form(net, x_star), fig1_mesh());
}

IntegratorConfig consensus_config() {
    IntegratorConfig cfg;
    cfg.t_end = 60.0;
    cfg.rtol = 1e-10;
    cfg.atol = 1e-12;
    return cfg;
}

Vector replicate(const Vector& block, Index N) {
    Vector X(block.size() * N);
    for (Index j = 0; j < N; ++j) X.segment(j * block.size(), block.size()) = block;
    return X;
}

}  // namespace

TEST_CASE("conserved moieties") {
    SUBCASE("A<->B") {
        const auto basis = conserved_moieties(stoichiometric_matrix(oracles::ab_network()));
        REQUIRE(basis.size() == 1);
        CHECK(basis[0](0) == 1);
        CHECK(basis[0](1) == 1);
    }
    SUBCASE("2A<->B") {
        const auto basis = conserved_moieties(stoichiometric_matrix(oracles::dimer_network()));
        REQUIRE(basis.size() == 1);
        CHECK(basis[0](0) == 1);
        CHECK(basis[0](1) == 2);
    }
    SUBCASE("full-rank stoichiometry has no moieties") {
        IntMatrix S(2, 2);
        S << 1, 0, 0, 1;
        CHECK(conserved_moieties(S).empty());
    }
    SUBCASE("exact annihilation on random networks") {
        std::mt19937 rng(131);
        for (int trial = 0; trial < 50; ++trial) {
            const IntMatrix S = stoichiometric_matrix(oracles::random_balanced_network(rng).net);
            for (const IntVector& w : conserved_moieties(S))
                CHECK((w.transpose() * S).isZero(0));
        }
    }
}

TEST_CASE("verify_consensus reproduces the spatial consensus prediction") {
    const CompartmentalSystem sys = ab_on_fig1();
    std::mt19937 rng(137);
    for (int run = 0; run < 3; ++run) {
        const Vector X0 = oracles::random_positive(rng, sys.state_size(), 0.1, 10.0);
        const ConsensusReport report = verify_consensus(sys, X0, consensus_config());
        CHECK(report.status == ConvergenceStatus::Consensus);
        CHECK(report.final_disagreement < 1e-6);
        CHECK(report.membership_residual < 1e-6);
        CHECK(report.prediction_error < 1e-5);
        CHECK(report.diffusion_alpha == 1.0);
        REQUIRE(report.moiety_drift.size() == 1);
        CHECK(report.moiety_drift[0] < 1e-8);
    }
}

TEST_CASE("the consensus limit is integrator-independent") {
    const CompartmentalSystem sys = ab_on_fig1();
    std::mt19937 rng(149);
    const Vector X0 = oracles::random_positive(rng, sys.state_size(), 0.2, 8.0);

    IntegratorConfig cfg = consensus_config();
    const ConsensusReport explicit_report = verify_consensus(sys, X0, cfg);
    cfg.method = Method::SemiImplicitDiffusion;
    const ConsensusReport imex_report = verify_consensus(sys, X0, cfg);

    CHECK((explicit_report.simulated_limit - imex_report.simulated_limit)
              .lpNorm<Eigen::Infinity>() <= 1e-5);
    // Both agree with the shared convex-minimization prediction.
    CHECK(explicit_report.prediction_error <= 1e-5);
    CHECK(imex_report.prediction_error <= 1e-5);
}

TEST_CASE("uniform equilibrium start is immediate consensus") {
    const CompartmentalSystem sys = ab_on_fig1();
    Vector x_eq(2);
    x_eq << 3.0, 6.0;  // on the equilibria ray
    IntegratorConfig cfg = consensus_config();
    cfg.t_end = 5.0;
    const ConsensusReport report = verify_consensus(sys, replicate(x_eq, sys.N), cfg);
    CHECK(report.status == ConvergenceStatus::Consensus);
    CHECK(report.final_disagreement <= 1e-10);
    CHECK(report.membership_residual <= 1e-10);
    CHECK(report.prediction_error <= 1e-8);
}

TEST_CASE("zero diffusion cannot reach consensus") {
    const CompartmentalSystem sys = ab_on_fig1(0.0, 0.0);
    Vector X0(8);
    X0 << 1.0, 1.0, 4.0, 2.0, 1.0, 1.0, 4.0, 2.0;  // two distinct block values
    IntegratorConfig cfg = consensus_config();
    cfg.t_end = 30.0;
    CHECK_THROWS_AS(verify_consensus(sys, X0, cfg), NotConverged);
    try {
        verify_consensus(sys, X0, cfg);
    } catch (const NotConverged& e) {
        CHECK(e.report.status == ConvergenceStatus::NonuniformSteady);
        CHECK(e.report.diffusion_alpha == 0.0);
        CHECK(e.report.final_disagreement > 1e-3);
    }
}

TEST_CASE("lyapunov report") {
    const CompartmentalSystem sys = ab_on_fig1();
    SUBCASE("stationary run") {
        IntegratorConfig cfg;
        cfg.t_end = 2.0;
        const Trajectory traj = integrate(sys, replicate(sys.bf.x_star, sys.N), cfg);
        const LyapunovReport rep = lyapunov_report(traj, sys);
        CHECK(std::abs(rep.max_step_increase) <= 1e-12);
        CHECK(std::abs(rep.total_decrease) <= 1e-12);
    }
    SUBCASE("generic run decreases and matches the endpoint recomputation") {
        std::mt19937 rng(139);
        const Vector X0 = oracles::random_positive(rng, sys.state_size(), 0.1, 10.0);
        IntegratorConfig cfg;
        cfg.t_end = 30.0;
        const Trajectory traj = integrate(sys, X0, cfg);
        const LyapunovReport rep = lyapunov_report(traj, sys);
        CHECK(rep.total_decrease > 0.0);
        CHECK(rep.total_decrease ==
              doctest::Approx(traj.energy.front() - traj.energy.back()).epsilon(1e-12));
        CHECK(rep.max_step_increase <= 10.0 * cfg.rtol * std::max(1.0, traj.energy.front()));
    }
}

TEST_CASE("boundary actuation experiment") {
    const ReactionNetwork net = oracles::inert_species_network(1.0);
    const CompartmentalSystem sys =
        assemble(net, balanced_form(net, std::nullopt), fig1_mesh());
    const Vector X0 = Vector::Ones(sys.state_size());
    IntegratorConfig cfg;
    cfg.t_end = 2.0;

    SUBCASE("zero schedule reproduces the closed run exactly") {
        const BoundarySchedule zero = [&](double) { return Vector::Zero(sys.boundary_size()); };
        const ActuationResult open = boundary_actuation_experiment(sys, zero, X0, cfg);
        const Trajectory closed = integrate(sys, X0, cfg);
        REQUIRE(open.trajectory.size() == closed.size());
        for (std::size_t s = 0; s < closed.size(); ++s)
            CHECK(open.trajectory.X[s] == closed.X[s]);
    }

    SUBCASE("constant influx grows the total mass linearly") {
        Vector influx = Vector::Zero(sys.boundary_size());
        influx(2) = 1.5;  // a single boundary site
        const BoundarySchedule schedule = [&](double) { return influx; };
        const ActuationResult result = boundary_actuation_experiment(sys, schedule, X0, cfg);
        const Trajectory& traj = result.trajectory;
        const auto mass = [&](const Vector& X) {
            double m = 0.0;
            for (Index j = 0; j < sys.N; ++j) m += sys.ops.star0(j) * X(j);
            return m;
        };
        for (std::size_t s = 0; s < traj.size(); ++s)
            CHECK(mass(traj.X[s]) ==
                  doctest::Approx(mass(X0) + 1.5 * traj.t[s]).epsilon(1e-10));
        // Uneven forcing must show up as spatial variance.
        CHECK(result.spatial_variance.back()(0) > 1e-6);
        CHECK(result.spatial_variance.front()(0) == doctest::Approx(0.0));
    }

    SUBCASE("periodic schedule keeps a bounded response") {
        const double amplitude = 0.3;
        const BoundarySchedule schedule = [&](double t) {
            return Vector::Constant(sys.boundary_size(), amplitude * std::sin(2.0 * t));
        };
        IntegratorConfig long_cfg;
        long_cfg.t_end = 20.0;
        const ActuationResult result =
            boundary_actuation_experiment(sys, schedule, X0, long_cfg);
        for (const Vector& X : result.trajectory.X) {
            CHECK(X.maxCoeff() < 10.0);
            CHECK(X.minCoeff() > 0.0);
        }
        REQUIRE(result.spatial_variance.size() == result.trajectory.size());
    }
}
