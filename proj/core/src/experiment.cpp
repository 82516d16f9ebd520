#include "haneat/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "haneat/errors.hpp"

#ifndef HANEAT_SOURCE_DATA_DIR
#define HANEAT_SOURCE_DATA_DIR "data"
#endif

namespace haneat {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << contents;
}

std::string split_name(std::size_t split) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "split_%03zu", split);
  return buf;
}

ordered_json quartiles_json(const Quartiles& q) {
  return {{"q25", q.q25}, {"median", q.median}, {"q75", q.q75}};
}

std::size_t hidden_index(ActivationKind kind) {
  for (std::size_t i = 0; i < kHiddenCatalog.size(); ++i) {
    if (kHiddenCatalog[i] == kind) return i;
  }
  throw InvariantError("not a hidden activation kind");
}

}  // namespace

std::string_view to_string(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::heterogeneous:
      return "heterogeneous";
    case ExperimentMode::homogeneous:
      return "homogeneous";
    case ExperimentMode::sweep:
      return "sweep";
  }
  return "unknown";
}

std::optional<ExperimentMode> parse_mode(std::string_view name) {
  for (auto mode : {ExperimentMode::heterogeneous, ExperimentMode::homogeneous, ExperimentMode::sweep}) {
    if (to_string(mode) == name) return mode;
  }
  return std::nullopt;
}

void ExperimentSpec::validate() const {
  evolution.validate();
  if (mode == ExperimentMode::homogeneous && (!activation || !is_hidden_kind(*activation))) {
    throw ConfigError("homogeneous mode needs --activation step|relu|sigmoid|gaussian");
  }
  if (folds < 2) throw ConfigError("folds must be at least 2");
  if (replicates == 0) throw ConfigError("replicates must be positive");
  if (parallel == 0) throw ConfigError("parallel must be positive");
  for (double r : sweep_rates) {
    if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("sweep rates must be in [0, 1]");
  }
}

double ActivationHistogram::operator[](ActivationKind kind) const { return frequency[hidden_index(kind)]; }

ActivationHistogram activation_histogram(std::span<const Genome> champions) {
  ActivationHistogram h;
  for (const auto& g : champions) {
    for (const auto& n : g.nodes) {
      if (n.role != NodeRole::hidden) continue;
      ++h.counts[hidden_index(n.activation)];
      ++h.total_hidden;
    }
  }
  if (h.total_hidden > 0) {
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
      h.frequency[i] = static_cast<double>(h.counts[i]) / static_cast<double>(h.total_hidden);
    }
  }
  return h;
}

std::string SummaryStats::to_json() const {
  ordered_json doc;
  doc["arm"] = arm;
  doc["dataset"] = dataset;
  doc["runs"] = runs.size();
  doc["train_mse"] = quartiles_json(train);
  doc["test_mse"] = quartiles_json(test);
  doc["median_nodes"] = median_nodes;
  doc["median_hidden_nodes"] = median_hidden;
  doc["median_enabled_connections"] = median_connections;
  ordered_json hist;
  hist["empty"] = histogram.empty();
  hist["total_hidden"] = histogram.total_hidden;
  for (std::size_t i = 0; i < kHiddenCatalog.size(); ++i) {
    hist[std::string(to_string(kHiddenCatalog[i]))] = histogram.frequency[i];
  }
  doc["activation_histogram"] = hist;
  doc["records"] = ordered_json::array();
  for (const auto& r : runs) {
    doc["records"].push_back({{"split", r.split},
                              {"replicate", r.replicate},
                              {"fold", r.fold},
                              {"seed", r.seed},
                              {"train_mse", r.train_mse},
                              {"test_mse", r.test_mse},
                              {"n_nodes", r.n_nodes},
                              {"n_hidden", r.n_hidden},
                              {"n_enabled_connections", r.n_enabled_connections}});
  }
  return doc.dump(2) + "\n";
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("HANEAT_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return HANEAT_SOURCE_DATA_DIR;
}

Dataset resolve_dataset(const std::string& ref, std::optional<Task> task, const std::filesystem::path& data_dir) {
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), ref) != names.end()) return fixture_targets(ref);

  const std::filesystem::path dir = data_dir.empty() ? default_data_dir() : data_dir;
  if (ref == "cancer") {
    return normalize(load_csv(dir / "cancer.csv", 9, 1, task.value_or(Task::classification)));
  }
  if (ref == "cholesterol" || ref == "engine") {
    const auto path = dir / (ref + ".csv");
    if (std::filesystem::exists(path)) return normalize(load_csv(path, task.value_or(Task::regression)));
    Dataset standin = normalize(synthetic_standin(ref));
    standin.warnings.push_back(path.string() + " not found; using synthetic stand-in");
    return standin;
  }
  if (!std::filesystem::exists(ref)) throw DataError("dataset '" + ref + "' is neither a known name nor a file");
  return normalize(load_csv(ref, task.value_or(Task::regression)));
}

SummaryStats run_arm(const ExperimentSpec& spec, const Dataset& data, const Arm& arm,
                     const std::filesystem::path& dir) {
  spec.validate();
  const FoldPlan plan = make_folds(data.size(), spec.folds, spec.replicates, spec.seed);
  const std::size_t splits = plan.split_count();

  EvolutionConfig cfg = spec.evolution;
  if (arm.p_mutate_activation) cfg.p_mutate_activation = *arm.p_mutate_activation;
  if (spec.parallel > 1) cfg.parallel = 1;

  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    write_file(dir / "folds.csv", plan.to_csv());
  }

  std::vector<RunRecord> records(splits);
  std::vector<RunMetrics> series(splits);
  std::vector<Genome> champions(splits);
  std::mutex log_mutex;
  std::exception_ptr failure;

  auto run_split = [&](std::size_t split) {
    const std::size_t replicate = split / spec.folds;
    const std::size_t fold = split % spec.folds;
    const Dataset train = data.subset(plan.train_rows(replicate, fold));
    const Dataset test = data.subset(plan.test_rows(replicate, fold));
    EvolutionConfig local = cfg;
    local.seed = mix_seed(spec.seed, split);

    GenerationCallback progress;
    if (spec.log_every > 0) {
      progress = [&](const RunState&, const GenerationRecord& rec) {
        if (rec.generation % spec.log_every != 0) return;
        std::lock_guard lock(log_mutex);
        std::cerr << arm.label << ' ' << split_name(split) << " gen " << rec.generation
                  << " train " << rec.best_train_mse << " test " << rec.best_test_mse
                  << " species " << rec.n_species << '\n';
      };
    }
    RunResult result = arm.fixed ? run_homogeneous(local, *arm.fixed, train, test, progress)
                                 : run(local, train, test, progress);

    RunRecord& rec = records[split];
    rec.split = split;
    rec.replicate = replicate;
    rec.fold = fold;
    rec.seed = local.seed;
    rec.train_mse = result.train_mse;
    rec.test_mse = result.test_mse;
    rec.n_nodes = result.champion.nodes.size();
    rec.n_hidden = result.champion.hidden_count();
    rec.n_enabled_connections = result.champion.enabled_connection_count();
    if (!dir.empty()) {
      write_file(dir / (split_name(split) + "_metrics.csv"), result.metrics.to_csv());
      write_file(dir / (split_name(split) + "_champion.json"), to_json(result.champion));
    }
    champions[split] = std::move(result.champion);
    series[split] = std::move(result.metrics);
  };

  const std::size_t workers = std::min(spec.parallel, splits);
  if (workers <= 1) {
    for (std::size_t s = 0; s < splits; ++s) run_split(s);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t s = w; s < splits; s += workers) {
          try {
            run_split(s);
          } catch (...) {
            std::lock_guard lock(log_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  SummaryStats stats;
  stats.arm = arm.label;
  stats.dataset = data.name;
  std::vector<double> train, test, nodes, hidden, conns;
  for (const auto& r : records) {
    train.push_back(r.train_mse);
    test.push_back(r.test_mse);
    nodes.push_back(static_cast<double>(r.n_nodes));
    hidden.push_back(static_cast<double>(r.n_hidden));
    conns.push_back(static_cast<double>(r.n_enabled_connections));
  }
  stats.train = quartiles(train);
  stats.test = quartiles(test);
  stats.median_nodes = median(nodes);
  stats.median_hidden = median(hidden);
  stats.median_connections = median(conns);
  stats.histogram = activation_histogram(champions);
  stats.runs = std::move(records);
  stats.series = std::move(series);
  if (!dir.empty()) write_file(dir / "summary.json", stats.to_json());
  return stats;
}

namespace {

Arm primary_arm(const ExperimentSpec& spec) {
  if (spec.mode == ExperimentMode::homogeneous) {
    return {std::string(to_string(*spec.activation)), spec.activation, std::nullopt};
  }
  return {"HA-NEAT", std::nullopt, std::nullopt};
}

std::string rate_label(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "rate_%g", rate);
  return buf;
}

void report_warnings(const Dataset& data) {
  for (const auto& w : data.warnings) std::cerr << "warning: " << data.name << ": " << w << '\n';
}

}  // namespace

std::vector<SummaryStats> run_experiment(const ExperimentSpec& spec) {
  if (spec.mode == ExperimentMode::sweep) return run_ablation(spec);
  spec.validate();
  const Dataset data = resolve_dataset(spec.dataset, spec.task);
  report_warnings(data);
  const Arm arm = primary_arm(spec);
  return {run_arm(spec, data, arm, spec.out_dir / arm.label)};
}

std::vector<SummaryStats> run_comparison(const ExperimentSpec& spec) {
  spec.validate();
  const Dataset data = resolve_dataset(spec.dataset, spec.task);
  report_warnings(data);
  std::vector<Arm> arms{{"HA-NEAT", std::nullopt, std::nullopt}};
  for (auto kind : kHiddenCatalog) arms.push_back({std::string(to_string(kind)), kind, std::nullopt});
  std::vector<SummaryStats> out;
  for (const auto& arm : arms) out.push_back(run_arm(spec, data, arm, spec.out_dir / arm.label));
  const auto report = compare_report(out);
  write_file(spec.out_dir / "compare.csv", report.table);
  write_file(spec.out_dir / "scatter.csv", report.scatter);
  return out;
}

std::vector<SummaryStats> run_ablation(const ExperimentSpec& spec) {
  spec.validate();
  const Dataset data = resolve_dataset(spec.dataset, spec.task);
  report_warnings(data);
  std::vector<SummaryStats> out;
  for (double rate : spec.sweep_rates) {
    const Arm arm{rate_label(rate), std::nullopt, rate};
    out.push_back(run_arm(spec, data, arm, spec.out_dir / arm.label));
  }
  write_file(spec.out_dir / "ablation.csv", ablation_series(out, spec.sweep_rates));
  return out;
}

CompareReport compare_report(std::span<const SummaryStats> arms) {
  CompareReport report;
  std::ostringstream table;
  table << "dataset,statistic";
  for (const auto& a : arms) table << ',' << a.arm;
  table << '\n';
  std::vector<std::string> datasets;
  for (const auto& a : arms) {
    if (std::find(datasets.begin(), datasets.end(), a.dataset) == datasets.end()) datasets.push_back(a.dataset);
  }
  struct Row {
    const char* name;
    double (*get)(const SummaryStats&);
  };
  const Row rows[] = {
      {"median_test_mse", [](const SummaryStats& s) { return s.test.median; }},
      {"q25_test_mse", [](const SummaryStats& s) { return s.test.q25; }},
      {"q75_test_mse", [](const SummaryStats& s) { return s.test.q75; }},
      {"median_train_mse", [](const SummaryStats& s) { return s.train.median; }},
      {"median_nodes", [](const SummaryStats& s) { return s.median_nodes; }},
      {"median_enabled_connections", [](const SummaryStats& s) { return s.median_connections; }},
  };
  for (const auto& ds : datasets) {
    for (const auto& row : rows) {
      table << ds << ',' << row.name;
      for (const auto& a : arms) {
        table << ',';
        if (a.dataset == ds) table << format_double(row.get(a));
      }
      table << '\n';
    }
  }
  report.table = table.str();

  std::ostringstream scatter;
  scatter << "arm,split,test_mse,n_enabled_connections,n_nodes\n";
  for (const auto& a : arms) {
    for (const auto& r : a.runs) {
      scatter << a.arm << ',' << r.split << ',' << format_double(r.test_mse) << ',' << r.n_enabled_connections
              << ',' << r.n_nodes << '\n';
    }
  }
  report.scatter = scatter.str();
  return report;
}

std::string ablation_series(std::span<const SummaryStats> arms, std::span<const double> rates) {
  if (arms.size() != rates.size()) throw ConfigError("ablation_series: one arm per rate expected");
  std::ostringstream out;
  out << "rate,generation,mean_train_mse,mean_test_mse,median_train_mse,median_test_mse\n";
  for (std::size_t a = 0; a < arms.size(); ++a) {
    const auto& series = arms[a].series;
    if (series.empty()) continue;
    const std::size_t generations = series.front().generations.size();
    for (std::size_t g = 0; g < generations; ++g) {
      std::vector<double> train, test;
      for (const auto& s : series) {
        train.push_back(s.generations[g].best_train_mse);
        test.push_back(s.generations[g].best_test_mse);
      }
      double mean_train = 0.0, mean_test = 0.0;
      for (std::size_t i = 0; i < train.size(); ++i) {
        mean_train += train[i];
        mean_test += test[i];
      }
      mean_train /= static_cast<double>(train.size());
      mean_test /= static_cast<double>(test.size());
      out << format_double(rates[a]) << ',' << series.front().generations[g].generation << ','
          << format_double(mean_train) << ',' << format_double(mean_test) << ',' << format_double(median(train))
          << ',' << format_double(median(test)) << '\n';
    }
  }
  return out.str();
}

}  // namespace haneat
