#include <benchmark/benchmark.h>

#include "stpete/experiment.hpp"
#include "stpete/khinchin.hpp"

namespace {

stpete::SimConfig config(std::int64_t games, stpete::ExecutionMode mode) {
    stpete::SimConfig c;
    c.games = static_cast<std::uint64_t>(games);
    c.delta = 0.05;
    c.rounds = 100;
    c.mode = mode;
    return c;
}

void BM_RoundsSerialStream(benchmark::State& state) {
    const auto cfg = config(state.range(0), stpete::ExecutionMode::Serial);
    for (auto _ : state) benchmark::DoNotOptimize(stpete::play_rounds(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 100);
}

void BM_RoundsParallelOpenMP(benchmark::State& state) {
    const auto cfg = config(state.range(0), stpete::ExecutionMode::Parallel);
    for (auto _ : state) benchmark::DoNotOptimize(stpete::play_rounds(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 100);
}

void BM_RoundsParallelLayoutSerialReference(benchmark::State& state) {
    const auto cfg = config(state.range(0), stpete::ExecutionMode::Parallel);
    for (auto _ : state) benchmark::DoNotOptimize(stpete::reference::play_rounds_parallel_layout(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 100);
}

void BM_SweepGrid(benchmark::State& state) {
    stpete::SweepSpec spec;
    spec.games_list.clear();
    for (int k = 3; k <= 14; ++k) spec.games_list.push_back(std::uint64_t{1} << k);
    spec.mode = state.range(0) == 0 ? stpete::ExecutionMode::Serial : stpete::ExecutionMode::Parallel;
    for (auto _ : state) benchmark::DoNotOptimize(stpete::run_sweep(spec));
}

}  // namespace

BENCHMARK(BM_RoundsSerialStream)->RangeMultiplier(8)->Range(1 << 8, 1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoundsParallelOpenMP)->RangeMultiplier(8)->Range(1 << 8, 1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoundsParallelLayoutSerialReference)
    ->RangeMultiplier(8)
    ->Range(1 << 8, 1 << 17)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
