#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "haneat/genome.hpp"
#include "haneat/rng.hpp"

namespace haneat {

struct SpeciationParams {
  std::size_t target_species = 10;
  double initial_threshold = 20.0;
  double threshold_step = 0.5;
  double threshold_floor = 0.5;
  std::uint32_t dropoff_age = 15;
  CompatibilityCoefficients coefficients;
};

struct Species {
  std::uint32_t id = 0;
  Genome representative;
  std::vector<std::size_t> members;  // indices into the population
  double best_fitness_ever = -std::numeric_limits<double>::infinity();
  std::uint32_t generations_since_improvement = 0;
};

struct SpeciationState {
  double threshold = 20.0;
  std::size_t target_species = 10;
  std::vector<Species> species;  // ascending id
  std::uint32_t next_species_id = 0;

  static SpeciationState initial(const SpeciationParams& params);
};

/// Places every genome in the first species (by id) whose representative is
/// closer than the threshold, founding new species otherwise. Empty species
/// are removed and each survivor draws a new representative from its members.
SpeciationState assign_species(std::span<const Genome> population, SpeciationState state,
                               const CompatibilityCoefficients& coeffs, Rng& rng);

/// Updates per-species best fitness and stagnation counters.
void record_fitness(SpeciationState& state, std::span<const double> fitnesses);

/// Additive controller steering the species count toward the target.
SpeciationState adjust_threshold(SpeciationState state, double step, double floor);

/// Fitness sharing: raw / species size, zeroed for species that have not
/// improved for `dropoff_age` generations unless they hold the best genome.
std::vector<double> shared_fitness(const SpeciationState& state, std::span<const double> fitnesses,
                                   std::uint32_t dropoff_age);

/// Species index of every population member.
std::vector<std::size_t> membership(const SpeciationState& state, std::size_t population_size);

}  // namespace haneat
