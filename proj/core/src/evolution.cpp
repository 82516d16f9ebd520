#include "haneat/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <thread>

#include "haneat/errors.hpp"
#include "haneat/network.hpp"

namespace haneat {

namespace {

void check_rate(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ConfigError(std::string(name) + " must be in [0, 1], got " + std::to_string(value));
  }
}

template <typename Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) fn(i);
    });
  }
}

void evaluate_population(RunState& state, const EvolutionConfig& cfg, const Dataset& train) {
  state.train_mse.assign(state.population.size(), 0.0);
  parallel_for(state.population.size(), cfg.parallel,
               [&](std::size_t i) { state.train_mse[i] = training_error(state.population[i], train); });
  for (std::size_t i = 0; i < state.population.size(); ++i) {
    state.population[i].fitness = fitness_of(state.train_mse[i]);
  }
}

void update_champion(RunState& state) {
  for (std::size_t i = 0; i < state.population.size(); ++i) {
    if (state.train_mse[i] < state.champion_train_mse) {
      state.champion_train_mse = state.train_mse[i];
      state.champion = state.population[i];
    }
  }
}

std::size_t tournament(std::span<const std::size_t> members, std::span<const double> adjusted, std::size_t size,
                       Rng& rng) {
  std::size_t best = members[rng.index(members.size())];
  for (std::size_t k = 1; k < size; ++k) {
    const std::size_t challenger = members[rng.index(members.size())];
    if (adjusted[challenger] > adjusted[best]) best = challenger;
  }
  return best;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

GenerationRecord record_for(const RunState& state, const Dataset& test) {
  GenerationRecord rec;
  rec.generation = state.generation;
  rec.best_train_mse = state.champion_train_mse;
  rec.best_test_mse = test.size() == 0 ? std::numeric_limits<double>::quiet_NaN()
                                       : training_error(state.champion, test);
  rec.n_nodes = state.champion.nodes.size();
  rec.n_enabled_connections = state.champion.enabled_connection_count();
  rec.n_species = state.speciation.species.size();
  rec.threshold = state.speciation.threshold;
  return rec;
}

}  // namespace

void EvolutionConfig::validate() const {
  if (population_size < 2) throw ConfigError("population_size must be at least 2");
  check_rate(crossover_fraction, "crossover_fraction");
  check_rate(p_add_node, "p_add_node");
  check_rate(p_add_connection, "p_add_connection");
  check_rate(p_mutate_activation, "p_mutate_activation");
  check_rate(p_mutate_weight, "p_mutate_weight");
  check_rate(p_enable, "p_enable");
  check_rate(p_disable, "p_disable");
  check_rate(disabled_inheritance, "disabled_inheritance");
  if (!(delta_weight >= 0.0)) throw ConfigError("delta_weight must be non-negative");
  if (!(init_weight_range >= 0.0)) throw ConfigError("init_weight_range must be non-negative");
  if (tournament_size == 0) throw ConfigError("tournament_size must be positive");
  if (!(speciation.initial_threshold > 0.0)) throw ConfigError("compatibility threshold must be positive");
  if (!(speciation.threshold_floor > 0.0)) throw ConfigError("threshold floor must be positive");
  if (catalog.empty()) throw ConfigError("activation catalog is empty");
  for (auto kind : catalog) {
    if (!is_hidden_kind(kind)) throw ConfigError("activation catalog may only hold hidden kinds");
  }
  if (fixed_activation && !is_hidden_kind(*fixed_activation)) {
    throw ConfigError("homogeneous activation must be a hidden kind");
  }
}

std::span<const ActivationKind> EvolutionConfig::active_catalog() const { return catalog; }

double fitness_of(double mse) {
  if (std::isnan(mse) || mse < 0.0) throw InvariantError("fitness_of: negative or NaN mse");
  if (std::isinf(mse)) return 0.0;
  return 1.0 / (1.0 + mse);
}

std::string RunMetrics::to_csv() const {
  std::ostringstream out;
  out << "generation,best_train_mse,best_test_mse,n_nodes,n_enabled_connections,n_species,threshold\n";
  for (const auto& r : generations) {
    out << r.generation << ',' << format_double(r.best_train_mse) << ',' << format_double(r.best_test_mse) << ','
        << r.n_nodes << ',' << r.n_enabled_connections << ',' << r.n_species << ',' << format_double(r.threshold)
        << '\n';
  }
  return out.str();
}

double training_error(const Genome& g, const Dataset& data) {
  try {
    const Phenotype p = Phenotype::compile(g);
    return data.task == Task::classification ? label_mse(p, data.inputs, data.targets)
                                             : mse(p, data.inputs, data.targets);
  } catch (const NumericError&) {
    return std::numeric_limits<double>::infinity();
  }
}

std::vector<std::size_t> allocate_offspring(std::span<const double> shares, std::size_t total) {
  std::vector<std::size_t> alloc(shares.size(), 0);
  if (shares.empty()) return alloc;
  double sum = 0.0;
  for (double s : shares) sum += s;
  std::vector<double> quota(shares.size());
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    std::fill(quota.begin(), quota.end(), static_cast<double>(total) / static_cast<double>(shares.size()));
  } else {
    for (std::size_t i = 0; i < shares.size(); ++i) quota[i] = static_cast<double>(total) * shares[i] / sum;
  }
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < quota.size(); ++i) {
    alloc[i] = static_cast<std::size_t>(std::floor(quota[i]));
    assigned += alloc[i];
  }
  std::vector<std::size_t> order(quota.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return quota[a] - std::floor(quota[a]) > quota[b] - std::floor(quota[b]);
  });
  for (std::size_t k = 0; assigned < total; k = (k + 1) % order.size()) {
    ++alloc[order[k]];
    ++assigned;
  }
  return alloc;
}

RunState initial_state(const EvolutionConfig& cfg, const Dataset& train) {
  cfg.validate();
  RunState state;
  state.rng = Rng(cfg.seed);
  state.innovations = InnovationRegistry::for_interface(train.n_inputs(), train.n_targets());
  state.speciation = SpeciationState::initial(cfg.speciation);
  state.population.reserve(cfg.population_size);
  for (std::size_t i = 0; i < cfg.population_size; ++i) {
    state.population.push_back(minimal_genome(train.n_inputs(), train.n_targets(), state.rng, cfg.init_weight_range));
  }
  evaluate_population(state, cfg, train);
  state.champion_train_mse = std::numeric_limits<double>::infinity();
  state.champion = state.population.front();
  update_champion(state);
  return state;
}

RunState step(RunState state, const EvolutionConfig& cfg, const Dataset& train) {
  const std::size_t n = state.population.size();
  Rng& rng = state.rng;
  state.innovations.new_generation();

  std::vector<double> fitness(n);
  for (std::size_t i = 0; i < n; ++i) fitness[i] = state.population[i].fitness;

  state.speciation = assign_species(state.population, std::move(state.speciation),
                                    cfg.speciation.coefficients, rng);
  record_fitness(state.speciation, fitness);
  const std::vector<double> adjusted = shared_fitness(state.speciation, fitness, cfg.speciation.dropoff_age);
  for (std::size_t i = 0; i < n; ++i) state.population[i].adjusted_fitness = adjusted[i];
  state.speciation = adjust_threshold(std::move(state.speciation), cfg.speciation.threshold_step,
                                      cfg.speciation.threshold_floor);

  std::vector<double> shares;
  for (const auto& sp : state.speciation.species) {
    double total = 0.0;
    for (auto m : sp.members) total += adjusted[m];
    shares.push_back(total);
  }
  const auto alloc = allocate_offspring(shares, cfg.population_size);

  const auto catalog = cfg.active_catalog();
  const bool activation_mutation = !cfg.fixed_activation && catalog.size() > 1;

  std::vector<Genome> next;
  next.reserve(cfg.population_size);
  for (std::size_t s = 0; s < state.speciation.species.size(); ++s) {
    const auto& members = state.speciation.species[s].members;
    std::size_t slots = alloc[s];
    if (slots == 0) continue;
    if (members.size() > cfg.elitism_min_species_size) {
      std::size_t best = members.front();
      for (auto m : members) {
        if (fitness[m] > fitness[best]) best = m;
      }
      next.push_back(state.population[best]);
      --slots;
    }
    for (; slots > 0; --slots) {
      const std::size_t first = tournament(members, adjusted, cfg.tournament_size, rng);
      Genome child;
      if (rng.bernoulli(cfg.crossover_fraction)) {
        const std::size_t second = tournament(members, adjusted, cfg.tournament_size, rng);
        const bool first_fitter = fitness[first] >= fitness[second];
        const Genome& fitter = state.population[first_fitter ? first : second];
        const Genome& other = state.population[first_fitter ? second : first];
        child = crossover(fitter, other, rng, cfg.disabled_inheritance);
      } else {
        child = state.population[first];
      }
      if (rng.bernoulli(cfg.p_add_node)) child = mutate_add_node(std::move(child), state.innovations, rng, catalog);
      if (rng.bernoulli(cfg.p_add_connection)) {
        child = mutate_add_connection(std::move(child), state.innovations, rng, cfg.init_weight_range,
                                      cfg.add_connection_attempts);
      }
      if (activation_mutation && rng.bernoulli(cfg.p_mutate_activation)) {
        child = mutate_activation(std::move(child), state.innovations, rng, catalog);
      }
      child = mutate_weights(std::move(child), rng, cfg.p_mutate_weight, cfg.delta_weight);
      child = mutate_toggle(std::move(child), rng, cfg.p_enable, cfg.p_disable);
      next.push_back(std::move(child));
    }
  }
  if (next.size() != cfg.population_size) {
    throw InvariantError("offspring allocation produced " + std::to_string(next.size()) + " genomes");
  }
  if (cfg.validate_genomes) {
    for (const auto& g : next) validate(g);
  }

  state.population = std::move(next);
  evaluate_population(state, cfg, train);
  update_champion(state);
  ++state.generation;
  return state;
}

RunResult run(const EvolutionConfig& cfg, const Dataset& train, const Dataset& test,
              const GenerationCallback& on_generation) {
  RunState state = initial_state(cfg, train);
  RunResult result;
  result.metrics.generations.reserve(cfg.max_generations);
  for (std::size_t g = 0; g < cfg.max_generations; ++g) {
    state = step(std::move(state), cfg, train);
    const auto rec = record_for(state, test);
    result.metrics.generations.push_back(rec);
    if (on_generation) on_generation(state, rec);
  }
  result.champion = state.champion;
  result.train_mse = state.champion_train_mse;
  result.test_mse = test.size() == 0 ? std::numeric_limits<double>::quiet_NaN()
                                     : training_error(state.champion, test);
  return result;
}

RunResult run_homogeneous(EvolutionConfig cfg, ActivationKind fixed, const Dataset& train, const Dataset& test,
                          const GenerationCallback& on_generation) {
  if (!is_hidden_kind(fixed)) throw ConfigError("homogeneous activation must be a hidden kind");
  cfg.fixed_activation = fixed;
  cfg.catalog = {fixed};
  cfg.p_mutate_activation = 0.0;
  return run(cfg, train, test, on_generation);
}

}  // namespace haneat
