#include <benchmark/benchmark.h>

#include "ghzsim/dynamics.hpp"
#include "ghzsim/measures.hpp"
#include "ghzsim/noise.hpp"

using namespace ghzsim;

namespace {

const power_law_params defaults(1e-2, 3.0);

void BM_beta_closed(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_closed(10.0, defaults));
    }
}
BENCHMARK(BM_beta_closed);

void BM_beta_quadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_quadrature(10.0, defaults));
    }
}
BENCHMARK(BM_beta_quadrature);

void BM_eigenvalues_8x8(benchmark::State& state) {
    const cmatrix rho = averaged_state(0.9, 2.0, defaults, topology::bip);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(rho));
    }
}
BENCHMARK(BM_eigenvalues_8x8);

void BM_averaged_state(benchmark::State& state) {
    const topology topo = static_cast<topology>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(averaged_state(1.0, 2.0, defaults, topo));
    }
}
BENCHMARK(BM_averaged_state)
    ->Arg(static_cast<int>(topology::com))
    ->Arg(static_cast<int>(topology::bip))
    ->Arg(static_cast<int>(topology::tri));

void BM_averaged_state_gh(benchmark::State& state) {
    const topology topo = static_cast<topology>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(averaged_state_gh(1.0, 2.0, defaults, topo, 16));
    }
}
BENCHMARK(BM_averaged_state_gh)
    ->Arg(static_cast<int>(topology::com))
    ->Arg(static_cast<int>(topology::bip))
    ->Arg(static_cast<int>(topology::tri));

void BM_averaged_state_mc(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            averaged_state_mc(1.0, 2.0, defaults, topology::tri, 10000, 42, 1));
    }
}
BENCHMARK(BM_averaged_state_mc);

void BM_negativity(benchmark::State& state) {
    const cmatrix rho = averaged_state(0.9, 2.0, defaults, topology::bip);
    for (auto _ : state) {
        benchmark::DoNotOptimize(negativity(rho));
    }
}
BENCHMARK(BM_negativity);

}  // namespace

BENCHMARK_MAIN();
