#include <benchmark/benchmark.h>

#include <random>

#include "rdnet/integrate.hpp"

using namespace rdnet;

namespace {

// Fixed unit-scale domain, refined n times per side: diffusion stiffness
// grows like n^2, which is where the semi-implicit mode earns its keep.
CompartmentalSystem refined_system(int n) {
    ReactionNetwork net;
    net.species = {"A", "B"};
    net.complexes = IntMatrix::Identity(2, 2);
    net.incidence = IntMatrix(2, 1);
    net.incidence << -1, 1;
    net.k_fwd = Vector::Constant(1, 2.0);
    net.k_bwd = Vector::Constant(1, 1.0);
    net.diffusion = Vector::Ones(2);
    Vector x_star(2);
    x_star << 1.0, 2.0;
    return assemble(net, balanced_form(net, x_star),
                    equilateral_strip(n, n, 1.0 / n));
}

Vector perturbed_start(const CompartmentalSystem& sys) {
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> dist(0.5, 3.0);
    return Vector::NullaryExpr(sys.state_size(), [&]() { return dist(rng); });
}

IntegratorConfig bench_config(Method method) {
    IntegratorConfig cfg;
    cfg.method = method;
    cfg.rtol = 1e-6;
    cfg.atol = 1e-8;
    cfg.t_end = 0.5;
    return cfg;
}

}  // namespace

static void BM_IntegrateExplicit(benchmark::State& state) {
    const CompartmentalSystem sys = refined_system(state.range(0));
    const Vector X0 = perturbed_start(sys);
    const IntegratorConfig cfg = bench_config(Method::ExplicitRK45);
    for (auto _ : state) {
        const Trajectory traj = integrate(sys, X0, cfg);
        benchmark::DoNotOptimize(traj.X.back());
        state.counters["steps"] = static_cast<double>(traj.size());
    }
}
BENCHMARK(BM_IntegrateExplicit)->Arg(4)->Arg(8)->Arg(16);

static void BM_IntegrateSemiImplicit(benchmark::State& state) {
    const CompartmentalSystem sys = refined_system(state.range(0));
    const Vector X0 = perturbed_start(sys);
    const IntegratorConfig cfg = bench_config(Method::SemiImplicitDiffusion);
    for (auto _ : state) {
        const Trajectory traj = integrate(sys, X0, cfg);
        benchmark::DoNotOptimize(traj.X.back());
        state.counters["steps"] = static_cast<double>(traj.size());
    }
}
BENCHMARK(BM_IntegrateSemiImplicit)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
