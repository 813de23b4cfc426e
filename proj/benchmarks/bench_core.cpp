#include <benchmark/benchmark.h>

#include <random>

#include "rdnet/compartmental.hpp"

using namespace rdnet;

namespace {

ReactionNetwork ab_network() {
    ReactionNetwork net;
    net.species = {"A", "B"};
    net.complexes = IntMatrix::Identity(2, 2);
    net.incidence = IntMatrix(2, 1);
    net.incidence << -1, 1;
    net.k_fwd = Vector::Constant(1, 2.0);
    net.k_bwd = Vector::Constant(1, 1.0);
    net.diffusion = Vector::Ones(2);
    return net;
}

CompartmentalSystem strip_system(int rows, int cols) {
    const ReactionNetwork net = ab_network();
    Vector x_star(2);
    x_star << 1.0, 2.0;
    return assemble(net, balanced_form(net, x_star), equilateral_strip(rows, cols));
}

Vector random_state(const CompartmentalSystem& sys) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.2, 5.0);
    return Vector::NullaryExpr(sys.state_size(), [&]() { return dist(rng); });
}

}  // namespace

static void BM_ClosedRhs(benchmark::State& state) {
    const CompartmentalSystem sys = strip_system(state.range(0), state.range(0));
    const Vector X = random_state(sys);
    for (auto _ : state) benchmark::DoNotOptimize(closed_rhs(sys, X));
    state.SetItemsProcessed(state.iterations() * sys.state_size());
}
BENCHMARK(BM_ClosedRhs)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_TotalEnergy(benchmark::State& state) {
    const CompartmentalSystem sys = strip_system(8, 8);
    const Vector X = random_state(sys);
    for (auto _ : state) benchmark::DoNotOptimize(total_energy(sys, X));
}
BENCHMARK(BM_TotalEnergy);

static void BM_MeshAssembly(benchmark::State& state) {
    const int n = state.range(0);
    for (auto _ : state) {
        const SimplicialComplex K = equilateral_strip(n, n);
        const DualComplex dual = circumcentric_dual(K);
        const Operators ops = build_operators(K, dual);
        benchmark::DoNotOptimize(laplacian(K, ops, Vector::Ones(2 * K.num_edges())));
    }
}
BENCHMARK(BM_MeshAssembly)->Arg(4)->Arg(8)->Arg(16);

static void BM_LimitPoint(benchmark::State& state) {
    const ReactionNetwork net = ab_network();
    Vector x_star(2);
    x_star << 1.0, 2.0;
    const EquilibriaSet eq = make_equilibria_set(net, x_star);
    Vector x0(2);
    x0 << 4.2, 0.3;
    for (auto _ : state) benchmark::DoNotOptimize(compute_limit_point(x0, eq));
}
BENCHMARK(BM_LimitPoint);
