#include "haneat/data.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "haneat/errors.hpp"
#include "haneat/rng.hpp"

namespace haneat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '"')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> parse_cell(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

struct HeaderShape {
  std::size_t inputs = 0;
  std::size_t targets = 0;
};

HeaderShape parse_header(std::string_view line, const std::filesystem::path& path) {
  const auto cells = split(line);
  HeaderShape shape;
  for (const auto& cell : cells) {
    if (cell.rfind("in_", 0) == 0 && shape.targets == 0) {
      if (cell != "in_" + std::to_string(shape.inputs)) break;
      ++shape.inputs;
    } else if (cell.rfind("out_", 0) == 0) {
      if (cell != "out_" + std::to_string(shape.targets)) break;
      ++shape.targets;
    } else {
      break;
    }
  }
  if (shape.inputs == 0 || shape.targets == 0 || shape.inputs + shape.targets != cells.size()) {
    throw DataError(path.string() + ": malformed header, expected in_0..in_{d-1},out_0..out_{t-1}");
  }
  return shape;
}

double input_scale(double v, double lo, double hi) { return hi > lo ? 2.0 * (v - lo) / (hi - lo) - 1.0 : 0.0; }
double target_scale(double v, double lo, double hi) { return hi > lo ? (v - lo) / (hi - lo) : 0.5; }

void column_range(const Matrix& m, std::vector<double>& lo, std::vector<double>& hi) {
  lo.assign(m.cols(), std::numeric_limits<double>::infinity());
  hi.assign(m.cols(), -std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      lo[c] = std::min(lo[c], m(r, c));
      hi[c] = std::max(hi[c], m(r, c));
    }
  }
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

std::string_view to_string(Task task) { return task == Task::regression ? "regression" : "classification"; }

std::optional<Task> parse_task(std::string_view name) {
  if (name == "regression") return Task::regression;
  if (name == "classification") return Task::classification;
  return std::nullopt;
}

Dataset Dataset::subset(std::span<const std::size_t> rows) const {
  Dataset out;
  out.name = name;
  out.task = task;
  out.normalization = normalization;
  out.inputs = Matrix(0, n_inputs());
  out.targets = Matrix(0, n_targets());
  for (auto r : rows) {
    if (r >= size()) throw ConfigError("Dataset::subset: row out of range");
    out.inputs.append_row(inputs.row(r));
    out.targets.append_row(targets.row(r));
  }
  return out;
}

Dataset load_csv(const std::filesystem::path& path, std::size_t n_inputs, std::size_t n_targets, Task task) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string() + ": cannot open file");
  std::string line;
  if (!std::getline(in, line) || trim(line).empty()) throw DataError(path.string() + ": empty file");
  const auto shape = parse_header(line, path);
  if (shape.inputs != n_inputs || shape.targets != n_targets) {
    throw DataError(path.string() + ": header has " + std::to_string(shape.inputs) + " inputs and " +
                    std::to_string(shape.targets) + " targets, expected " + std::to_string(n_inputs) + " and " +
                    std::to_string(n_targets));
  }

  Dataset d;
  d.name = path.stem().string();
  d.task = task;
  d.inputs = Matrix(0, n_inputs);
  d.targets = Matrix(0, n_targets);
  std::vector<double> values(n_inputs + n_targets);
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != values.size()) {
      throw DataError(path.string() + ":" + std::to_string(line_number) + ": expected " +
                      std::to_string(values.size()) + " columns, found " + std::to_string(cells.size()));
    }
    bool complete = true;
    for (std::size_t c = 0; c < cells.size() && complete; ++c) {
      const auto v = parse_cell(cells[c]);
      if (v) {
        values[c] = *v;
      } else {
        complete = false;
      }
    }
    if (!complete) {
      ++d.dropped_rows;
      continue;
    }
    d.inputs.append_row(std::span<const double>(values).first(n_inputs));
    d.targets.append_row(std::span<const double>(values).subspan(n_inputs));
  }
  if (d.size() == 0) throw DataError(path.string() + ": no usable data rows");
  if (d.dropped_rows > 0) {
    d.warnings.push_back("dropped " + std::to_string(d.dropped_rows) + " incomplete rows");
  }
  return d;
}

Dataset load_csv(const std::filesystem::path& path, Task task) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string() + ": cannot open file");
  std::string line;
  if (!std::getline(in, line) || trim(line).empty()) throw DataError(path.string() + ": empty file");
  const auto shape = parse_header(line, path);
  return load_csv(path, shape.inputs, shape.targets, task);
}

Dataset normalize(const Dataset& d) {
  if (d.normalization) return d;
  Dataset out = d;
  NormalizationParams p;
  column_range(d.inputs, p.input_min, p.input_max);
  column_range(d.targets, p.target_min, p.target_max);
  for (std::size_t r = 0; r < d.size(); ++r) {
    for (std::size_t c = 0; c < d.n_inputs(); ++c) {
      out.inputs(r, c) = input_scale(d.inputs(r, c), p.input_min[c], p.input_max[c]);
    }
    for (std::size_t c = 0; c < d.n_targets(); ++c) {
      out.targets(r, c) = target_scale(d.targets(r, c), p.target_min[c], p.target_max[c]);
    }
  }
  for (std::size_t c = 0; c < d.n_inputs(); ++c) {
    if (!(p.input_max[c] > p.input_min[c])) out.warnings.push_back("constant input column in_" + std::to_string(c));
  }
  for (std::size_t c = 0; c < d.n_targets(); ++c) {
    if (!(p.target_max[c] > p.target_min[c])) {
      out.warnings.push_back("constant target column out_" + std::to_string(c));
    }
  }
  out.normalization = std::move(p);
  return out;
}

Dataset denormalize(const Dataset& d) {
  if (!d.normalization) return d;
  const auto& p = *d.normalization;
  Dataset out = d;
  out.normalization.reset();
  for (std::size_t r = 0; r < d.size(); ++r) {
    for (std::size_t c = 0; c < d.n_inputs(); ++c) {
      const double span = p.input_max[c] - p.input_min[c];
      out.inputs(r, c) = span > 0 ? (d.inputs(r, c) + 1.0) / 2.0 * span + p.input_min[c] : p.input_min[c];
    }
    for (std::size_t c = 0; c < d.n_targets(); ++c) {
      const double span = p.target_max[c] - p.target_min[c];
      out.targets(r, c) = span > 0 ? d.targets(r, c) * span + p.target_min[c] : p.target_min[c];
    }
  }
  return out;
}

FoldPlan::FoldPlan(std::size_t n_rows, std::size_t k, std::size_t replicates, std::uint64_t seed)
    : n_rows_(n_rows), k_(k), seed_(seed) {
  if (k == 0) throw ConfigError("make_folds: k must be positive");
  if (n_rows < k) throw ConfigError("make_folds: fewer rows than folds");
  Rng rng(seed);
  for (std::size_t rep = 0; rep < replicates; ++rep) {
    std::vector<std::size_t> perm(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) perm[i] = i;
    for (std::size_t i = n_rows - 1; i > 0; --i) std::swap(perm[i], perm[rng.index(i + 1)]);
    std::vector<std::size_t> folds(n_rows);
    for (std::size_t f = 0; f < k; ++f) {
      for (std::size_t pos = f * n_rows / k; pos < (f + 1) * n_rows / k; ++pos) folds[perm[pos]] = f;
    }
    permutations_.push_back(std::move(perm));
    folds_.push_back(std::move(folds));
  }
}

std::vector<std::size_t> FoldPlan::test_rows(std::size_t replicate, std::size_t fold) const {
  const auto& perm = permutations_.at(replicate);
  std::vector<std::size_t> rows(perm.begin() + static_cast<std::ptrdiff_t>(fold * n_rows_ / k_),
                                perm.begin() + static_cast<std::ptrdiff_t>((fold + 1) * n_rows_ / k_));
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<std::size_t> FoldPlan::train_rows(std::size_t replicate, std::size_t fold) const {
  const auto& folds = folds_.at(replicate);
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < n_rows_; ++r) {
    if (folds[r] != fold) rows.push_back(r);
  }
  return rows;
}

std::string FoldPlan::to_csv() const {
  std::ostringstream out;
  out << "replicate,row,fold\n";
  for (std::size_t rep = 0; rep < folds_.size(); ++rep) {
    for (std::size_t r = 0; r < n_rows_; ++r) out << rep << ',' << r << ',' << folds_[rep][r] << '\n';
  }
  return out.str();
}

FoldPlan make_folds(std::size_t n_rows, std::size_t k, std::size_t replicates, std::uint64_t seed) {
  return FoldPlan(n_rows, k, replicates, seed);
}

std::span<const std::string_view> fixture_names() {
  static constexpr std::array<std::string_view, 4> names = {"gaussian_1d", "sigmoid_1d", "composite_fig3",
                                                            "multitarget_fig4"};
  return names;
}

Dataset fixture_targets(std::string_view name) {
  constexpr std::size_t samples = 200;
  const bool multi = name == "multitarget_fig4";
  if (std::find(fixture_names().begin(), fixture_names().end(), name) == fixture_names().end()) {
    throw ConfigError("unknown fixture '" + std::string(name) + "'");
  }
  Dataset d;
  d.name = std::string(name);
  d.task = Task::regression;
  d.inputs = Matrix(samples, 1);
  d.targets = Matrix(samples, multi ? 2 : 1);
  const double lo = logistic(-10.0);
  const double hi = logistic(10.0);
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(samples - 1);
    d.inputs(i, 0) = x;
    if (name == "gaussian_1d") {
      d.targets(i, 0) = std::exp(-(3.0 * x) * (3.0 * x));
    } else if (name == "sigmoid_1d") {
      d.targets(i, 0) = logistic(6.0 * x);
    } else if (name == "composite_fig3") {
      const double bump = 4.0 * (x + 0.35);
      d.targets(i, 0) = 0.6 * std::exp(-bump * bump) + 0.4 * logistic(10.0 * (x - 0.4));
    } else {
      const double wave = 10.0 * std::sin(std::numbers::pi * x);
      d.targets(i, 0) = std::clamp((logistic(wave) - lo) / (hi - lo), 0.0, 1.0);
      d.targets(i, 1) = (std::tanh(wave) + 1.0) / 2.0;
    }
  }
  return d;
}

Dataset synthetic_standin(std::string_view name, std::uint64_t seed) {
  Rng rng(seed);
  Dataset d;
  d.task = Task::regression;
  if (name == "cholesterol") {
    d.name = "cholesterol-standin";
    constexpr std::size_t rows = 264;
    constexpr std::size_t bands = 21;
    d.inputs = Matrix(rows, bands);
    d.targets = Matrix(rows, 3);
    for (std::size_t r = 0; r < rows; ++r) {
      const double a = rng.uniform();
      const double b = rng.uniform();
      const double c = rng.uniform();
      for (std::size_t k = 0; k < bands; ++k) {
        const double t = static_cast<double>(k) / (bands - 1);
        const double spectrum = a * std::exp(-std::pow((t - 0.25) / 0.15, 2)) +
                                b * std::exp(-std::pow((t - 0.55) / 0.2, 2)) + c * (0.3 + 0.7 * t);
        d.inputs(r, k) = spectrum + 0.02 * rng.uniform(-1.0, 1.0);
      }
      d.targets(r, 0) = 1.5 * a + 0.4 * b * c;
      d.targets(r, 1) = std::sqrt(b) + 0.2 * a;
      d.targets(r, 2) = logistic(4.0 * (c - a));
    }
  } else if (name == "engine") {
    d.name = "engine-standin";
    constexpr std::size_t rows = 1199;
    d.inputs = Matrix(rows, 2);
    d.targets = Matrix(rows, 2);
    for (std::size_t r = 0; r < rows; ++r) {
      const double fuel = rng.uniform();
      const double speed = rng.uniform();
      d.inputs(r, 0) = fuel;
      d.inputs(r, 1) = speed;
      const double load = fuel / (0.3 + speed);
      d.targets(r, 0) = std::tanh(2.0 * load) * (1.0 - 0.3 * speed) + 0.01 * rng.uniform(-1.0, 1.0);
      d.targets(r, 1) = std::exp(-std::pow((speed - 0.6) / 0.25, 2)) * fuel + 0.01 * rng.uniform(-1.0, 1.0);
    }
  } else {
    throw ConfigError("no synthetic stand-in for '" + std::string(name) + "'");
  }
  return d;
}

}  // namespace haneat
