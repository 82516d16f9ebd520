#include "haneat/speciation.hpp"

#include <algorithm>

#include "haneat/errors.hpp"

namespace haneat {

SpeciationState SpeciationState::initial(const SpeciationParams& params) {
  if (!(params.initial_threshold > 0.0)) throw ConfigError("compatibility threshold must be positive");
  SpeciationState s;
  s.threshold = params.initial_threshold;
  s.target_species = params.target_species;
  return s;
}

SpeciationState assign_species(std::span<const Genome> population, SpeciationState state,
                               const CompatibilityCoefficients& coeffs, Rng& rng) {
  for (auto& sp : state.species) sp.members.clear();
  for (std::size_t i = 0; i < population.size(); ++i) {
    bool placed = false;
    for (auto& sp : state.species) {
      if (compatibility_distance(population[i], sp.representative, coeffs) < state.threshold) {
        sp.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      Species founded;
      founded.id = state.next_species_id++;
      founded.representative = population[i];
      founded.members.push_back(i);
      state.species.push_back(std::move(founded));
    }
  }
  std::erase_if(state.species, [](const Species& sp) { return sp.members.empty(); });
  for (auto& sp : state.species) {
    sp.representative = population[sp.members[rng.index(sp.members.size())]];
  }
  return state;
}

void record_fitness(SpeciationState& state, std::span<const double> fitnesses) {
  for (auto& sp : state.species) {
    double best = -std::numeric_limits<double>::infinity();
    for (auto m : sp.members) best = std::max(best, fitnesses[m]);
    if (best > sp.best_fitness_ever) {
      sp.best_fitness_ever = best;
      sp.generations_since_improvement = 0;
    } else {
      ++sp.generations_since_improvement;
    }
  }
}

SpeciationState adjust_threshold(SpeciationState state, double step, double floor) {
  const auto count = state.species.size();
  if (count > state.target_species) {
    state.threshold += step;
  } else if (count < state.target_species) {
    state.threshold -= step;
  }
  state.threshold = std::max(state.threshold, floor);
  return state;
}

std::vector<double> shared_fitness(const SpeciationState& state, std::span<const double> fitnesses,
                                   std::uint32_t dropoff_age) {
  std::vector<double> adjusted(fitnesses.size(), 0.0);
  if (fitnesses.empty()) return adjusted;
  const auto champion = static_cast<std::size_t>(
      std::max_element(fitnesses.begin(), fitnesses.end()) - fitnesses.begin());
  for (const auto& sp : state.species) {
    const bool holds_champion = std::find(sp.members.begin(), sp.members.end(), champion) != sp.members.end();
    const bool stagnant = sp.generations_since_improvement >= dropoff_age && !holds_champion;
    const double size = static_cast<double>(sp.members.size());
    for (auto m : sp.members) {
      if (fitnesses[m] < 0.0) throw ConfigError("shared_fitness: negative fitness");
      adjusted[m] = stagnant ? 0.0 : fitnesses[m] / size;
    }
  }
  return adjusted;
}

std::vector<std::size_t> membership(const SpeciationState& state, std::size_t population_size) {
  std::vector<std::size_t> out(population_size, state.species.size());
  for (std::size_t s = 0; s < state.species.size(); ++s) {
    for (auto m : state.species[s].members) {
      if (m >= population_size || out[m] != state.species.size()) {
        throw InvariantError("species membership is not a partition");
      }
      out[m] = s;
    }
  }
  for (auto s : out) {
    if (s == state.species.size()) throw InvariantError("genome without species");
  }
  return out;
}

}  // namespace haneat
