#include <benchmark/benchmark.h>

#include "tiling_disc/constructions.h"
#include "tiling_disc/random_graphs.h"
#include "tiling_disc/solver.h"
#include "tiling_disc/templates.h"

namespace tiling_disc {
namespace {

void BM_EnumerateMod03(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const Construction c = extremal_mod03(r, r * (r + 1));
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = count_perfect_tilings(c.graph, r);
    benchmark::DoNotOptimize(count);
  }
  state.counters["tilings"] = static_cast<double>(count);
  state.counters["tilings/s"] = benchmark::Counter(
      static_cast<double>(count) * state.iterations(), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_EnumerateMod03)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Extremes(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? SearchMode::kExhaustive : SearchMode::kBranchAndBound;
  Rng rng(1);
  const Graph g = erdos_renyi(18, 0.8, rng);
  const EdgeLabeling f = random_labeling(g, rng);
  SolverOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(discrepancy_extremes(g, f, 3, mode, options));
  }
}
BENCHMARK(BM_Extremes)
    ->ArgsProduct({{0, 1}, {1, 4}})
    ->ArgNames({"bnb", "threads"})
    ->Unit(benchmark::kMillisecond);

void BM_SampleTiling(benchmark::State& state) {
  const Construction c = state.range(0) == 1 ? extremal_mod1(1, 60) : extremal_mod2(1, 84);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_tiling(c.graph, c.meta.r, seed++));
  }
}
BENCHMARK(BM_SampleTiling)->Arg(1)->Arg(2)->ArgName("mod");

void BM_TemplateSweep(benchmark::State& state) {
  const auto scenarios = all_scenarios();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_templates(scenarios, 3, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_TemplateSweep)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tiling_disc

BENCHMARK_MAIN();
