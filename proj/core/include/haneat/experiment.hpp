#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "haneat/activation.hpp"
#include "haneat/data.hpp"
#include "haneat/evolution.hpp"
#include "haneat/genome.hpp"
#include "haneat/stats.hpp"

namespace haneat {

enum class ExperimentMode { heterogeneous, homogeneous, sweep };

std::string_view to_string(ExperimentMode mode);
std::optional<ExperimentMode> parse_mode(std::string_view name);

struct ExperimentSpec {
  /// Fixture name, shipped dataset name (cancer, cholesterol, engine) or CSV path.
  std::string dataset = "gaussian_1d";
  std::optional<Task> task;
  ExperimentMode mode = ExperimentMode::heterogeneous;
  std::optional<ActivationKind> activation;
  EvolutionConfig evolution;
  std::size_t folds = 5;
  std::size_t replicates = 10;
  std::filesystem::path out_dir = "results";
  std::uint64_t seed = 1;
  /// Concurrent splits.
  std::size_t parallel = 1;
  /// Progress line on stderr every N generations; 0 disables.
  std::size_t log_every = 0;
  std::vector<double> sweep_rates = {0.0, 0.1, 0.2, 0.5, 1.0};

  void validate() const;
};

/// Relative frequency of hidden activation kinds, indexed like kHiddenCatalog.
struct ActivationHistogram {
  std::array<std::size_t, 4> counts{};
  std::array<double, 4> frequency{};
  std::size_t total_hidden = 0;

  bool empty() const { return total_hidden == 0; }
  double operator[](ActivationKind kind) const;
};

ActivationHistogram activation_histogram(std::span<const Genome> champions);

struct RunRecord {
  std::size_t split = 0;
  std::size_t replicate = 0;
  std::size_t fold = 0;
  std::uint64_t seed = 0;
  double train_mse = 0.0;
  double test_mse = 0.0;
  std::size_t n_nodes = 0;
  std::size_t n_hidden = 0;
  std::size_t n_enabled_connections = 0;
};

struct SummaryStats {
  std::string arm;
  std::string dataset;
  Quartiles train;
  Quartiles test;
  double median_nodes = 0.0;
  double median_hidden = 0.0;
  double median_connections = 0.0;
  ActivationHistogram histogram;
  std::vector<RunRecord> runs;
  std::vector<RunMetrics> series;  // per split, same order as runs

  /// Stable-key-order JSON document.
  std::string to_json() const;
};

/// One column of a comparison: heterogeneous, or homogeneous with `fixed`.
struct Arm {
  std::string label;
  std::optional<ActivationKind> fixed;
  std::optional<double> p_mutate_activation;
};

/// Loads and normalizes a dataset reference; see ExperimentSpec::dataset.
Dataset resolve_dataset(const std::string& ref, std::optional<Task> task = std::nullopt,
                        const std::filesystem::path& data_dir = {});

/// Directory searched for shipped datasets: $HANEAT_DATA_DIR, else the source tree's data/.
std::filesystem::path default_data_dir();

/// One evolution run per (replicate, fold) split, aggregated. Writes
/// per-split metrics and champion genomes plus summary.json to `dir`
/// when it is non-empty.
SummaryStats run_arm(const ExperimentSpec& spec, const Dataset& data, const Arm& arm, const std::filesystem::path& dir);

/// The arm selected by `spec.mode` and `spec.activation` (sweep runs every rate).
std::vector<SummaryStats> run_experiment(const ExperimentSpec& spec);

/// HA-NEAT plus one homogeneous arm per hidden kind, with a comparison table.
std::vector<SummaryStats> run_comparison(const ExperimentSpec& spec);

/// One heterogeneous arm per activation-mutation rate, with per-generation series.
std::vector<SummaryStats> run_ablation(const ExperimentSpec& spec);

struct CompareReport {
  std::string table;    // dataset,statistic,<arm>...
  std::string scatter;  // arm,split,test_mse,n_enabled_connections,n_nodes
};

CompareReport compare_report(std::span<const SummaryStats> arms);

/// rate,generation,mean_train_mse,mean_test_mse,median_train_mse,median_test_mse
std::string ablation_series(std::span<const SummaryStats> arms, std::span<const double> rates);

}  // namespace haneat
