#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "haneat/activation.hpp"
#include "haneat/data.hpp"
#include "haneat/genome.hpp"
#include "haneat/innovation.hpp"
#include "haneat/rng.hpp"
#include "haneat/speciation.hpp"

namespace haneat {

/// Run hyperparameters. Defaults are the published HA-NEAT settings.
struct EvolutionConfig {
  std::size_t population_size = 100;
  std::size_t max_generations = 3000;
  double crossover_fraction = 0.90;

  // Per-genome chances.
  double p_add_node = 0.01;
  double p_add_connection = 0.30;
  double p_mutate_activation = 0.20;

  // Per-gene chances.
  double p_mutate_weight = 0.20;
  double delta_weight = 2.0;
  double p_enable = 0.0002;
  double p_disable = 0.002;

  double init_weight_range = 2.0;
  std::size_t add_connection_attempts = 20;
  double disabled_inheritance = 0.75;
  std::size_t tournament_size = 2;
  /// Species with more members than this keep their champion unmodified.
  std::size_t elitism_min_species_size = 5;

  SpeciationParams speciation;

  /// Kinds add-node and mutate-activation draw from.
  std::vector<ActivationKind> catalog{kHiddenCatalog.begin(), kHiddenCatalog.end()};
  /// Homogeneous NEAT: every new node gets this kind and activation mutation is off.
  std::optional<ActivationKind> fixed_activation;

  std::uint64_t seed = 1;
  /// Worker threads for fitness evaluation; results do not depend on it.
  std::size_t parallel = 1;
  /// Check every genome's invariants after each generation.
  bool validate_genomes = false;

  /// Throws ConfigError when rates or sizes are out of range.
  void validate() const;

  std::span<const ActivationKind> active_catalog() const;
};

/// Maps a non-negative MSE to a fitness in (0, 1]: 1 / (1 + mse).
double fitness_of(double mse);

struct GenerationRecord {
  std::size_t generation = 0;
  double best_train_mse = 0.0;
  double best_test_mse = 0.0;
  std::size_t n_nodes = 0;
  std::size_t n_enabled_connections = 0;
  std::size_t n_species = 0;
  double threshold = 0.0;
};

struct RunMetrics {
  std::vector<GenerationRecord> generations;

  /// generation,best_train_mse,best_test_mse,n_nodes,n_enabled_connections,n_species,threshold
  std::string to_csv() const;
};

struct RunState {
  std::size_t generation = 0;
  std::vector<Genome> population;
  std::vector<double> train_mse;  // parallel to population
  SpeciationState speciation;
  InnovationRegistry innovations;
  Genome champion;
  double champion_train_mse = 0.0;
  Rng rng{1};
};

/// Training error used for selection: plain MSE for regression, MSE on
/// thresholded labels for classification. Non-finite activations give +inf.
double training_error(const Genome& g, const Dataset& data);

/// Random minimal population, evaluated, with the champion selected.
RunState initial_state(const EvolutionConfig& cfg, const Dataset& train);

/// One generation: speciate the evaluated population, allocate offspring,
/// reproduce and mutate, then evaluate the new population and update the champion.
RunState step(RunState state, const EvolutionConfig& cfg, const Dataset& train);

struct RunResult {
  Genome champion;
  double train_mse = 0.0;
  double test_mse = 0.0;
  RunMetrics metrics;
};

using GenerationCallback = std::function<void(const RunState&, const GenerationRecord&)>;

/// Runs `max_generations` steps; `test` is only reported, never selected on.
RunResult run(const EvolutionConfig& cfg, const Dataset& train, const Dataset& test,
              const GenerationCallback& on_generation = {});

/// NEAT with every hidden node fixed to `fixed`.
RunResult run_homogeneous(EvolutionConfig cfg, ActivationKind fixed, const Dataset& train, const Dataset& test,
                          const GenerationCallback& on_generation = {});

/// Offspring per species, largest-remainder rounded to sum to `total`.
/// Falls back to an even split when every share is zero.
std::vector<std::size_t> allocate_offspring(std::span<const double> shares, std::size_t total);

}  // namespace haneat
