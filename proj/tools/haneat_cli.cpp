#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "haneat/config.hpp"
#include "haneat/errors.hpp"
#include "haneat/experiment.hpp"

namespace {

using namespace haneat;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

/// Flag values as typed on the command line; unset flags leave the spec alone.
struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> dataset;
  std::optional<std::string> mode;
  std::optional<std::string> activation;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> generations;
  std::optional<std::size_t> population;
  std::optional<std::size_t> replicates;
  std::optional<std::size_t> folds;
  std::optional<std::string> out;
  std::optional<std::size_t> parallel;
  std::optional<std::size_t> log_every;
};

void add_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--config", f.config, "Flat JSON config file");
  cmd.add_option("--dataset", f.dataset, "Fixture name, cancer|cholesterol|engine, or a CSV path");
  cmd.add_option("--mode", f.mode, "heterogeneous|homogeneous|sweep");
  cmd.add_option("--activation", f.activation, "Hidden activation for homogeneous mode");
  cmd.add_option("--seed", f.seed, "Base seed");
  cmd.add_option("--generations", f.generations, "Generations per run");
  cmd.add_option("--population", f.population, "Population size");
  cmd.add_option("--replicates", f.replicates, "Cross-validation replicates");
  cmd.add_option("--folds", f.folds, "Cross-validation folds");
  cmd.add_option("--out", f.out, "Output directory");
  cmd.add_option("--parallel", f.parallel, "Splits run concurrently");
  cmd.add_option("--log-every", f.log_every, "Progress line every N generations (0 = quiet)");
}

/// Precedence: preset defaults, then the config file, then HANEAT_OUT_DIR
/// (output directory only), then explicit flags.
ExperimentSpec build_spec(const Flags& f, const std::function<void(ExperimentSpec&)>& preset) {
  ExperimentSpec spec;
  if (preset) preset(spec);
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw ConfigError("cannot open config " + *f.config);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    apply_config(spec, text);
  }
  if (const char* env = std::getenv("HANEAT_OUT_DIR"); env != nullptr && *env != '\0') spec.out_dir = env;

  if (f.dataset) spec.dataset = *f.dataset;
  if (f.mode) {
    const auto m = parse_mode(*f.mode);
    if (!m) throw ConfigError("--mode must be heterogeneous, homogeneous or sweep");
    spec.mode = *m;
  }
  if (f.activation) {
    const auto k = parse_activation(*f.activation);
    if (!k || !is_hidden_kind(*k)) throw ConfigError("--activation must be step, relu, sigmoid or gaussian");
    spec.activation = *k;
  }
  if (f.seed) {
    spec.seed = *f.seed;
    spec.evolution.seed = *f.seed;
  }
  if (f.generations) spec.evolution.max_generations = *f.generations;
  if (f.population) spec.evolution.population_size = *f.population;
  if (f.replicates) spec.replicates = *f.replicates;
  if (f.folds) spec.folds = *f.folds;
  if (f.out) spec.out_dir = *f.out;
  if (f.parallel) spec.parallel = *f.parallel;
  if (f.log_every) spec.log_every = *f.log_every;
  spec.validate();
  spec.evolution.validate();
  return spec;
}

void write_effective_config(const ExperimentSpec& spec) {
  std::filesystem::create_directories(spec.out_dir);
  std::ofstream out(spec.out_dir / "config.json");
  if (!out) throw DataError("cannot write " + (spec.out_dir / "config.json").string());
  out << dump_config(spec);
}

void print_summaries(const std::vector<SummaryStats>& arms) {
  for (const auto& s : arms) {
    std::cout << s.dataset << ' ' << s.arm << ": median test MSE " << s.test.median << " (q25 " << s.test.q25
              << ", q75 " << s.test.q75 << "), median train MSE " << s.train.median << ", median nodes "
              << s.median_nodes << ", median enabled connections " << s.median_connections << '\n';
  }
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Evolve feedforward networks with per-node activation functions"};
  app.require_subcommand(1);

  Flags run_flags, compare_flags, ablate_flags, fixture_flags;
  auto* run_cmd = app.add_subcommand("run", "Run one experiment spec over all CV splits");
  auto* compare_cmd = app.add_subcommand("compare", "HA-NEAT against one homogeneous arm per activation");
  auto* ablate_cmd = app.add_subcommand("ablate-mutation", "Sweep the activation-mutation rate");
  auto* fixture_cmd = app.add_subcommand("fixtures", "Run the built-in 1-D fixture targets");
  add_flags(*run_cmd, run_flags);
  add_flags(*compare_cmd, compare_flags);
  add_flags(*ablate_cmd, ablate_flags);
  add_flags(*fixture_cmd, fixture_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (run_cmd->parsed()) {
    const ExperimentSpec spec = build_spec(run_flags, {});
    write_effective_config(spec);
    print_summaries(run_experiment(spec));
  } else if (compare_cmd->parsed()) {
    const ExperimentSpec spec = build_spec(compare_flags, {});
    write_effective_config(spec);
    const auto arms = run_comparison(spec);
    std::cout << compare_report(arms).table;
  } else if (ablate_cmd->parsed()) {
    ExperimentSpec spec = build_spec(ablate_flags, [](ExperimentSpec& s) {
      s.dataset = "composite_fig3";
      s.evolution.population_size = 50;
    });
    spec.mode = ExperimentMode::sweep;
    write_effective_config(spec);
    print_summaries(run_ablation(spec));
  } else if (fixture_cmd->parsed()) {
    const ExperimentSpec base = build_spec(fixture_flags, {});
    std::vector<std::string> names;
    if (fixture_flags.dataset) {
      names.push_back(*fixture_flags.dataset);
    } else {
      for (auto n : fixture_names()) names.emplace_back(n);
    }
    for (const auto& name : names) {
      ExperimentSpec spec = base;
      spec.dataset = name;
      spec.out_dir = base.out_dir / name;
      fixture_targets(name);  // rejects non-fixture names before any work
      write_effective_config(spec);
      print_summaries(run_experiment(spec));
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const haneat::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const haneat::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
