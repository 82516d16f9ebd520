#include <benchmark/benchmark.h>

#include "haneat/evolution.hpp"

namespace {

using namespace haneat;

void BM_Generation(benchmark::State& state) {
  const Dataset data = fixture_targets("gaussian_1d");
  EvolutionConfig cfg;
  cfg.population_size = static_cast<std::size_t>(state.range(0));
  RunState s = initial_state(cfg, data);
  for (int i = 0; i < 50; ++i) s = step(std::move(s), cfg, data);
  for (auto _ : state) s = step(std::move(s), cfg, data);
}
BENCHMARK(BM_Generation)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
