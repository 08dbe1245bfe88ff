#include <benchmark/benchmark.h>

#include "nrssp/approx.hpp"
#include "nrssp/gen.hpp"
#include "nrssp/oracle.hpp"

namespace {

nrssp::Instance instance_with(std::int64_t jobs, std::int64_t supplies) {
    nrssp::GenConfig cfg;
    cfg.seed = 42;
    cfg.jobs = {jobs, jobs};
    cfg.supplies = {supplies, supplies};
    cfg.grid = 8;
    cfg.max_value = 100;
    return nrssp::gen_random(cfg);
}

void BM_OrderJobs(benchmark::State& state) {
    const nrssp::Instance inst = instance_with(state.range(0), 16);
    for (auto _ : state) benchmark::DoNotOptimize(nrssp::order_jobs(inst));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrderJobs)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_ListSchedule(benchmark::State& state) {
    const nrssp::Instance inst = instance_with(state.range(0), state.range(0));
    const nrssp::Permutation order = nrssp::order_jobs(inst);
    for (auto _ : state) benchmark::DoNotOptimize(nrssp::list_schedule(inst, order));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ListSchedule)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_ExactSolve(benchmark::State& state) {
    const nrssp::Instance inst = instance_with(state.range(0), 4);
    for (auto _ : state) benchmark::DoNotOptimize(nrssp::exact_solve(inst));
}
BENCHMARK(BM_ExactSolve)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_TightRatio(benchmark::State& state) {
    const nrssp::Instance inst = nrssp::gen_tight(nrssp::Rational(1, 10000));
    for (auto _ : state) benchmark::DoNotOptimize(nrssp::approximation_ratio(inst));
}
BENCHMARK(BM_TightRatio);

}  // namespace
BENCHMARK_MAIN();
