#include "haneat/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "haneat/errors.hpp"

namespace haneat {

namespace {

using json = nlohmann::json;
using Setter = std::function<void(ExperimentSpec&, const json&)>;

template <typename T>
T as(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

std::size_t as_count(const json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError("config key '" + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double as_real(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

ActivationKind as_kind(const json& v, const std::string& key) {
  const auto kind = parse_activation(as<std::string>(v, key));
  if (!kind) throw ConfigError("config key '" + key + "' names an unknown activation");
  return *kind;
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"dataset", [](ExperimentSpec& s, const json& v) { s.dataset = as<std::string>(v, "dataset"); }},
      {"task",
       [](ExperimentSpec& s, const json& v) {
         const auto t = parse_task(as<std::string>(v, "task"));
         if (!t) throw ConfigError("config key 'task' must be regression or classification");
         s.task = *t;
       }},
      {"mode",
       [](ExperimentSpec& s, const json& v) {
         const auto m = parse_mode(as<std::string>(v, "mode"));
         if (!m) throw ConfigError("config key 'mode' must be heterogeneous, homogeneous or sweep");
         s.mode = *m;
       }},
      {"activation", [](ExperimentSpec& s, const json& v) { s.activation = as_kind(v, "activation"); }},
      {"folds", [](ExperimentSpec& s, const json& v) { s.folds = as_count(v, "folds"); }},
      {"replicates", [](ExperimentSpec& s, const json& v) { s.replicates = as_count(v, "replicates"); }},
      {"out", [](ExperimentSpec& s, const json& v) { s.out_dir = as<std::string>(v, "out"); }},
      {"seed",
       [](ExperimentSpec& s, const json& v) {
         s.seed = as_count(v, "seed");
         s.evolution.seed = s.seed;
       }},
      {"parallel", [](ExperimentSpec& s, const json& v) { s.parallel = as_count(v, "parallel"); }},
      {"log_every", [](ExperimentSpec& s, const json& v) { s.log_every = as_count(v, "log_every"); }},
      {"sweep_rates",
       [](ExperimentSpec& s, const json& v) {
         if (!v.is_array()) throw ConfigError("config key 'sweep_rates' must be an array");
         s.sweep_rates.clear();
         for (const auto& r : v) s.sweep_rates.push_back(as_real(r, "sweep_rates"));
       }},
      {"population_size",
       [](ExperimentSpec& s, const json& v) { s.evolution.population_size = as_count(v, "population_size"); }},
      {"max_generations",
       [](ExperimentSpec& s, const json& v) { s.evolution.max_generations = as_count(v, "max_generations"); }},
      {"crossover_fraction",
       [](ExperimentSpec& s, const json& v) { s.evolution.crossover_fraction = as_real(v, "crossover_fraction"); }},
      {"p_add_node", [](ExperimentSpec& s, const json& v) { s.evolution.p_add_node = as_real(v, "p_add_node"); }},
      {"p_add_connection",
       [](ExperimentSpec& s, const json& v) { s.evolution.p_add_connection = as_real(v, "p_add_connection"); }},
      {"p_mutate_activation",
       [](ExperimentSpec& s, const json& v) {
         s.evolution.p_mutate_activation = as_real(v, "p_mutate_activation");
       }},
      {"p_mutate_weight",
       [](ExperimentSpec& s, const json& v) { s.evolution.p_mutate_weight = as_real(v, "p_mutate_weight"); }},
      {"delta_weight", [](ExperimentSpec& s, const json& v) { s.evolution.delta_weight = as_real(v, "delta_weight"); }},
      {"p_enable", [](ExperimentSpec& s, const json& v) { s.evolution.p_enable = as_real(v, "p_enable"); }},
      {"p_disable", [](ExperimentSpec& s, const json& v) { s.evolution.p_disable = as_real(v, "p_disable"); }},
      {"init_weight_range",
       [](ExperimentSpec& s, const json& v) { s.evolution.init_weight_range = as_real(v, "init_weight_range"); }},
      {"add_connection_attempts",
       [](ExperimentSpec& s, const json& v) {
         s.evolution.add_connection_attempts = as_count(v, "add_connection_attempts");
       }},
      {"disabled_inheritance",
       [](ExperimentSpec& s, const json& v) {
         s.evolution.disabled_inheritance = as_real(v, "disabled_inheritance");
       }},
      {"tournament_size",
       [](ExperimentSpec& s, const json& v) { s.evolution.tournament_size = as_count(v, "tournament_size"); }},
      {"elitism_min_species_size",
       [](ExperimentSpec& s, const json& v) {
         s.evolution.elitism_min_species_size = as_count(v, "elitism_min_species_size");
       }},
      {"target_species",
       [](ExperimentSpec& s, const json& v) {
         s.evolution.speciation.target_species = as_count(v, "target_species");
       }},
      {"compatibility_threshold",
       [](ExperimentSpec& s, const json& v) {
         s.evolution.speciation.initial_threshold = as_real(v, "compatibility_threshold");
       }},
      {"threshold_step",
       [](ExperimentSpec& s, const json& v) {
         s.evolution.speciation.threshold_step = as_real(v, "threshold_step");
       }},
      {"threshold_floor",
       [](ExperimentSpec& s, const json& v) {
         s.evolution.speciation.threshold_floor = as_real(v, "threshold_floor");
       }},
      {"c_excess",
       [](ExperimentSpec& s, const json& v) { s.evolution.speciation.coefficients.excess = as_real(v, "c_excess"); }},
      {"c_disjoint",
       [](ExperimentSpec& s, const json& v) {
         s.evolution.speciation.coefficients.disjoint = as_real(v, "c_disjoint");
       }},
      {"c_weight",
       [](ExperimentSpec& s, const json& v) { s.evolution.speciation.coefficients.weight = as_real(v, "c_weight"); }},
      {"dropoff_age",
       [](ExperimentSpec& s, const json& v) {
         s.evolution.speciation.dropoff_age = static_cast<std::uint32_t>(as_count(v, "dropoff_age"));
       }},
      {"catalog",
       [](ExperimentSpec& s, const json& v) {
         if (!v.is_array() || v.empty()) throw ConfigError("config key 'catalog' must be a non-empty array");
         s.evolution.catalog.clear();
         for (const auto& k : v) s.evolution.catalog.push_back(as_kind(k, "catalog"));
       }},
  };
  return table;
}

}  // namespace

void apply_config(ExperimentSpec& spec, std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a flat JSON object");
  const auto& table = setters();
  for (const auto& [key, value] : doc.items()) {
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(spec, value);
  }
}

ExperimentSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  ExperimentSpec spec;
  apply_config(spec, buffer.str());
  return spec;
}

std::string dump_config(const ExperimentSpec& spec) {
  const auto& e = spec.evolution;
  nlohmann::ordered_json doc;
  doc["dataset"] = spec.dataset;
  if (spec.task) doc["task"] = to_string(*spec.task);
  doc["mode"] = to_string(spec.mode);
  if (spec.activation) doc["activation"] = to_string(*spec.activation);
  doc["folds"] = spec.folds;
  doc["replicates"] = spec.replicates;
  doc["out"] = spec.out_dir.string();
  doc["seed"] = spec.seed;
  doc["parallel"] = spec.parallel;
  doc["log_every"] = spec.log_every;
  doc["sweep_rates"] = spec.sweep_rates;
  doc["population_size"] = e.population_size;
  doc["max_generations"] = e.max_generations;
  doc["crossover_fraction"] = e.crossover_fraction;
  doc["p_add_node"] = e.p_add_node;
  doc["p_add_connection"] = e.p_add_connection;
  doc["p_mutate_activation"] = e.p_mutate_activation;
  doc["p_mutate_weight"] = e.p_mutate_weight;
  doc["delta_weight"] = e.delta_weight;
  doc["p_enable"] = e.p_enable;
  doc["p_disable"] = e.p_disable;
  doc["init_weight_range"] = e.init_weight_range;
  doc["add_connection_attempts"] = e.add_connection_attempts;
  doc["disabled_inheritance"] = e.disabled_inheritance;
  doc["tournament_size"] = e.tournament_size;
  doc["elitism_min_species_size"] = e.elitism_min_species_size;
  doc["target_species"] = e.speciation.target_species;
  doc["compatibility_threshold"] = e.speciation.initial_threshold;
  doc["threshold_step"] = e.speciation.threshold_step;
  doc["threshold_floor"] = e.speciation.threshold_floor;
  doc["c_excess"] = e.speciation.coefficients.excess;
  doc["c_disjoint"] = e.speciation.coefficients.disjoint;
  doc["c_weight"] = e.speciation.coefficients.weight;
  doc["dropoff_age"] = e.speciation.dropoff_age;
  doc["catalog"] = nlohmann::ordered_json::array();
  for (auto k : e.catalog) doc["catalog"].push_back(to_string(k));
  return doc.dump(2) + "\n";
}

}  // namespace haneat
