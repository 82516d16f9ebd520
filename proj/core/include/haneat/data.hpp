#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "haneat/matrix.hpp"

namespace haneat {

enum class Task { regression, classification };

std::string_view to_string(Task task);
std::optional<Task> parse_task(std::string_view name);

/// Per-column min/max of the raw data, kept so values can be mapped back.
struct NormalizationParams {
  std::vector<double> input_min, input_max;
  std::vector<double> target_min, target_max;
};

struct Dataset {
  std::string name;
  Matrix inputs;
  Matrix targets;
  Task task = Task::regression;
  std::size_t dropped_rows = 0;
  std::optional<NormalizationParams> normalization;
  std::vector<std::string> warnings;

  std::size_t size() const { return inputs.rows(); }
  std::size_t n_inputs() const { return inputs.cols(); }
  std::size_t n_targets() const { return targets.cols(); }

  Dataset subset(std::span<const std::size_t> rows) const;
};

/// Reads a CSV whose header is in_0..in_{n-1},out_0..out_{m-1}. Rows with an
/// empty or unparseable cell are dropped and counted in `dropped_rows`.
Dataset load_csv(const std::filesystem::path& path, std::size_t n_inputs, std::size_t n_targets, Task task);

/// Same, inferring the column counts from the header.
Dataset load_csv(const std::filesystem::path& path, Task task);

/// Min-max maps inputs to [-1, 1] and targets to [0, 1] over the full
/// dataset. A dataset that already carries parameters is returned unchanged.
/// Constant columns map to 0 (inputs) or 0.5 (targets) with a warning.
Dataset normalize(const Dataset& d);

/// Inverse of `normalize`; the result carries no parameters.
Dataset denormalize(const Dataset& d);

/// Repeated k-fold split: per replicate a seeded shuffle, then contiguous folds.
class FoldPlan {
 public:
  FoldPlan(std::size_t n_rows, std::size_t k, std::size_t replicates, std::uint64_t seed);

  std::size_t k() const { return k_; }
  std::size_t replicates() const { return permutations_.size(); }
  std::size_t n_rows() const { return n_rows_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t split_count() const { return k_ * replicates(); }

  std::size_t fold_of(std::size_t replicate, std::size_t row) const { return folds_[replicate][row]; }
  std::vector<std::size_t> test_rows(std::size_t replicate, std::size_t fold) const;
  std::vector<std::size_t> train_rows(std::size_t replicate, std::size_t fold) const;

  /// Delimited (replicate,row,fold) triples.
  std::string to_csv() const;

 private:
  std::size_t n_rows_;
  std::size_t k_;
  std::uint64_t seed_;
  std::vector<std::vector<std::size_t>> permutations_;
  std::vector<std::vector<std::size_t>> folds_;  // [replicate][row] -> fold
};

FoldPlan make_folds(std::size_t n_rows, std::size_t k, std::size_t replicates, std::uint64_t seed);

/// Names accepted by `fixture_targets`.
std::span<const std::string_view> fixture_names();

/// 200 evenly spaced samples on x in [-1, 1]:
///   gaussian_1d       exp(-(3x)^2)
///   sigmoid_1d        1 / (1 + exp(-6x))
///   composite_fig3    0.6 exp(-(4(x + 0.35))^2) + 0.4 / (1 + exp(-10(x - 0.4)))
///   multitarget_fig4  sigma(10 sin(pi x)) rescaled to [0, 1] and (tanh(10 sin(pi x)) + 1) / 2
Dataset fixture_targets(std::string_view name);

/// Synthetic data with the shape of the cholesterol (21 -> 3, 264 rows) or
/// engine (2 -> 2, 1199 rows) benchmarks, used when the originals are absent.
Dataset synthetic_standin(std::string_view name, std::uint64_t seed = 7);

}  // namespace haneat
