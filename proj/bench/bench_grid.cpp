// Serial reference vs OpenMP kernels.

#include "dsum/dedekind.hpp"
#include "dsum/spectra.hpp"
#include "dsum/verify.hpp"

#include <benchmark/benchmark.h>

using namespace dsum;

namespace {

void BM_dft_inverse_serial(benchmark::State& state) {
    const PeriodicSeq C = random_rational_sequence(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(serial::dft_inverse(C));
}

void BM_dft_inverse_parallel(benchmark::State& state) {
    const PeriodicSeq C = random_rational_sequence(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(dft_inverse(C));
}

void BM_e_sum_serial(benchmark::State& state) {
    const PeriodicSeq C = random_rational_sequence(state.range(0), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::e_sum_sequence(6, 1, 1, CycloNum(Rational(2)), C));
}

void BM_e_sum_parallel(benchmark::State& state) {
    const PeriodicSeq C = random_rational_sequence(state.range(0), 2);
    for (auto _ : state) benchmark::DoNotOptimize(e_sum_sequence(6, 1, 1, CycloNum(Rational(2)), C));
}

GridSpec bench_grid() {
    GridSpec g = default_grid(Identity::Prop2);
    g.n = {5, 6, 7};
    g.r = {0, 1};
    return g;
}

void BM_run_grid(benchmark::State& state) {
    const GridSpec g = bench_grid();
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_grid(g, {workers, std::nullopt}));
}

}  // namespace

BENCHMARK(BM_dft_inverse_serial)->Arg(8)->Arg(16)->Arg(30);
BENCHMARK(BM_dft_inverse_parallel)->Arg(8)->Arg(16)->Arg(30);
BENCHMARK(BM_e_sum_serial)->Arg(8)->Arg(12);
BENCHMARK(BM_e_sum_parallel)->Arg(8)->Arg(12);
BENCHMARK(BM_run_grid)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
