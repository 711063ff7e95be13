// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "spinwave/bessel.hpp"
#include "spinwave/dynamics.hpp"
#include "spinwave/retrieval.hpp"

using namespace spinwave;

namespace {

void BM_BesselIScaled(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bessel_i_scaled(0, x));
}
BENCHMARK(BM_BesselIScaled)->Arg(1)->Arg(8)->Arg(100)->Arg(10000);

void BM_BesselJ(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bessel_j(0, x));
}
BENCHMARK(BM_BesselJ)->Arg(5)->Arg(15)->Arg(60);

void BM_BuildKernel(benchmark::State& state) {
    const SpatialGrid grid = make_grid(static_cast<int>(state.range(0)), QuadratureRule::GaussLegendre);
    for (auto _ : state) benchmark::DoNotOptimize(build_kernel(20.0, grid));
}
BENCHMARK(BM_BuildKernel)->Arg(128)->Arg(256)->Arg(512);

void BM_OptimalSpinWave(benchmark::State& state) {
    const SpatialGrid grid = make_grid(static_cast<int>(state.range(0)), QuadratureRule::GaussLegendre);
    for (auto _ : state) benchmark::DoNotOptimize(optimal_spin_wave(20.0, grid).eta_star);
}
BENCHMARK(BM_OptimalSpinWave)->Arg(128)->Arg(256)->Arg(512);

void BM_Efficiency(benchmark::State& state) {
    const SpatialGrid grid = make_grid(static_cast<int>(state.range(0)), QuadratureRule::GaussLegendre);
    const RetrievalKernel kernel = build_kernel(20.0, grid);
    const SpinWave spin = exponential_spin_wave(grid, 10.0 / 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(efficiency(kernel, spin, Direction::Backward));
}
BENCHMARK(BM_Efficiency)->Arg(128)->Arg(512);

void BM_SimulateRead(benchmark::State& state) {
    const double gamma = 3.8120156124e7 / 12.0;
    const AtomicEnsemble ens(20.0, 20.0, gamma, 1.5 * gamma, 3e-3);
    const SpatialGrid grid = make_grid(static_cast<int>(state.range(0)), QuadratureRule::GaussLegendre);
    const SpinWave spin = exponential_spin_wave(grid, 10.0 / 3.0);
    const PulseSpec read = pi_read_pulse(100.0 * 0.5 * gamma * 21.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_read(ens, spin, read, 15.0, 1e-9).total_efficiency);
}
BENCHMARK(BM_SimulateRead)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_FastRetrievalEfficiency(benchmark::State& state) {
    const double gamma = 3.8120156124e7 / 12.0;
    const AtomicEnsemble ens(20.0, 20.0, gamma, 1.5 * gamma, 3e-3);
    const SpatialGrid grid = make_grid(static_cast<int>(state.range(0)), QuadratureRule::GaussLegendre);
    const SpinWave spin = exponential_spin_wave(grid, 10.0 / 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(fast_retrieval_efficiency(ens, spin));
}
BENCHMARK(BM_FastRetrievalEfficiency)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
