#include <benchmark/benchmark.h>

#include "parareal/async.hpp"
#include "parareal/parareal.hpp"

using namespace parareal;

namespace {

PararealConfig bench_config(int n_slices, int m) {
    // S=25, E=30 comparison setup with T = N * 0.1.
    return make_config({0.2, 0.05, 25.0, 30.0, n_slices * 0.1}, n_slices, 0.1, 0.001, m);
}

void BM_TridiagonalSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TridiagonalSystem sys;
    sys.sub.assign(n, -0.3);
    sys.super.assign(n, -0.3);
    sys.diag.assign(n, 1.6);
    std::vector<double> rhs(n, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_tridiagonal(sys, rhs));
}
BENCHMARK(BM_TridiagonalSolve)->Arg(149)->Arg(249)->Arg(999);

void BM_BackwardEulerStep(benchmark::State& state) {
    const PararealConfig cfg = bench_config(16, static_cast<int>(state.range(0)));
    const StateVector u0 = initial_state(cfg.grid, cfg.problem);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            backward_euler_step(u0, cfg.decomposition.dtau_fine, cfg.grid, cfg.problem));
}
BENCHMARK(BM_BackwardEulerStep)->Arg(150)->Arg(250);

void BM_FineSlice(benchmark::State& state) {
    const PararealConfig cfg = bench_config(16, static_cast<int>(state.range(0)));
    const StateVector u0 = initial_state(cfg.grid, cfg.problem);
    for (auto _ : state) benchmark::DoNotOptimize(fine_propagate(u0, cfg));
}
BENCHMARK(BM_FineSlice)->Arg(150)->Arg(250);

void BM_SequentialReference(benchmark::State& state) {
    const PararealConfig cfg = bench_config(16, 150);
    for (auto _ : state) benchmark::DoNotOptimize(sequential_reference(cfg));
}
BENCHMARK(BM_SequentialReference);

void BM_PararealSync(benchmark::State& state) {
    PararealConfig cfg = bench_config(16, 150);
    cfg.fine_workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(parareal_solve(cfg));
}
BENCHMARK(BM_PararealSync)->Arg(1)->Arg(2);

void BM_AsyncSolve(benchmark::State& state) {
    const PararealConfig cfg = bench_config(static_cast<int>(state.range(0)), 150);
    for (auto _ : state)
        benchmark::DoNotOptimize(async_solve(cfg, cfg.decomposition.n_slices));
}
BENCHMARK(BM_AsyncSolve)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
