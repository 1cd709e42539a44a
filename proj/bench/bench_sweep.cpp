// Serial reference vs OpenMP sweep kernels.

#include <benchmark/benchmark.h>

#include "bohrlab/sweep.hpp"

using namespace bohrlab;

namespace {

SampleSetSpec bench_spec(int count) {
    SampleSetSpec spec;
    spec.seed = 99;
    spec.count = count;
    spec.dims = {1, 2, 4};
    spec.degree = 32;
    spec.depth = 4;
    return spec;
}

const std::vector<MatrixSeries1D>& cached_samples() {
    static const std::vector<MatrixSeries1D> samples = make_sample_set(bench_spec(512));
    return samples;
}

void bm_generate(benchmark::State& state, ExecutionPolicy policy) {
    SampleSetSpec spec = bench_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto samples = make_sample_set(spec, policy);
        benchmark::DoNotOptimize(samples.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_bohr_sweep(benchmark::State& state, ExecutionPolicy policy) {
    const auto& samples = cached_samples();
    CheckSpec spec;
    spec.kind = VerdictKind::bohr;
    spec.r = 1.0 / 3.0;
    for (auto _ : state) {
        auto verdicts = sweep_check(spec, samples, policy);
        benchmark::DoNotOptimize(verdicts.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int>(samples.size()));
}

void bm_growth_sweep(benchmark::State& state, ExecutionPolicy policy) {
    const auto& samples = cached_samples();
    for (auto _ : state) {
        auto margins = growth_margins(samples, 0.5, 128, policy);
        benchmark::DoNotOptimize(margins.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int>(samples.size()));
}

}  // namespace

BENCHMARK_CAPTURE(bm_generate, serial, ExecutionPolicy::serial)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_generate, parallel, ExecutionPolicy::parallel)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_bohr_sweep, serial, ExecutionPolicy::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_bohr_sweep, parallel, ExecutionPolicy::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_growth_sweep, serial, ExecutionPolicy::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_growth_sweep, parallel, ExecutionPolicy::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
