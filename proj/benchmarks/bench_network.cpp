#include <benchmark/benchmark.h>

#include "haneat/data.hpp"
#include "haneat/network.hpp"

namespace {

using namespace haneat;

// Minimal genome grown by repeated node splits; `arg` hidden nodes.
Genome grown_genome(std::size_t n_in, std::size_t hidden, std::uint64_t seed) {
  Rng rng(seed);
  auto reg = InnovationRegistry::for_interface(n_in, 1);
  Genome g = minimal_genome(n_in, 1, rng);
  while (g.hidden_count() < hidden) {
    g = mutate_add_node(std::move(g), reg, rng, hidden_catalog());
    g = mutate_add_connection(std::move(g), reg, rng);
  }
  return g;
}

void BM_Compile(benchmark::State& state) {
  const Genome g = grown_genome(9, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Phenotype::compile(g));
}
BENCHMARK(BM_Compile)->Arg(2)->Arg(10)->Arg(40);

void BM_Evaluate(benchmark::State& state) {
  const Genome g = grown_genome(9, static_cast<std::size_t>(state.range(0)), 2);
  const Phenotype p = Phenotype::compile(g);
  std::vector<double> x(9, 0.3), out(1), scratch;
  for (auto _ : state) {
    p.evaluate_into(x, out, scratch);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Evaluate)->Arg(2)->Arg(10)->Arg(40);

void BM_DatasetMse(benchmark::State& state) {
  const Dataset d = fixture_targets("composite_fig3");
  const Phenotype p = Phenotype::compile(grown_genome(1, 6, 3));
  for (auto _ : state) benchmark::DoNotOptimize(mse(p, d.inputs, d.targets));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.size()));
}
BENCHMARK(BM_DatasetMse);

}  // namespace
