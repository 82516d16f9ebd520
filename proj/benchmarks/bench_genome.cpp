#include <benchmark/benchmark.h>

#include "haneat/genome.hpp"

namespace {

using namespace haneat;

std::pair<Genome, Genome> related_pair(std::size_t splits) {
  Rng rng(5);
  auto reg = InnovationRegistry::for_interface(4, 2);
  Genome a = minimal_genome(4, 2, rng);
  for (std::size_t i = 0; i < splits; ++i) {
    a = mutate_add_node(std::move(a), reg, rng, hidden_catalog());
    a = mutate_add_connection(std::move(a), reg, rng);
  }
  Genome b = mutate_activation(a, reg, rng, hidden_catalog());
  b = mutate_weights(std::move(b), rng, 0.5, 1.0);
  b = mutate_add_node(std::move(b), reg, rng, hidden_catalog());
  return {a, b};
}

void BM_Crossover(benchmark::State& state) {
  const auto [a, b] = related_pair(static_cast<std::size_t>(state.range(0)));
  Rng rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(crossover(a, b, rng));
}
BENCHMARK(BM_Crossover)->Arg(5)->Arg(30);

void BM_CompatibilityDistance(benchmark::State& state) {
  const auto [a, b] = related_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compatibility_distance(a, b));
}
BENCHMARK(BM_CompatibilityDistance)->Arg(5)->Arg(30);

void BM_AddConnection(benchmark::State& state) {
  const auto [a, b] = related_pair(static_cast<std::size_t>(state.range(0)));
  Rng rng(7);
  InnovationRegistry reg(10000, 10000);
  for (auto _ : state) benchmark::DoNotOptimize(mutate_add_connection(a, reg, rng));
}
BENCHMARK(BM_AddConnection)->Arg(5)->Arg(30);

}  // namespace
