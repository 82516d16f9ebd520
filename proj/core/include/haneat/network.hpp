#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "haneat/activation.hpp"
#include "haneat/genome.hpp"
#include "haneat/matrix.hpp"

namespace haneat {

/// Compiled feedforward evaluation plan for one genome.
///
/// Nodes are stored in topological order (ties broken by ascending id) and
/// every enabled connection appears exactly once as an incoming edge of its
/// target. Immutable after construction; `evaluate` may be called from any
/// number of threads.
class Phenotype {
 public:
  struct Incoming {
    std::size_t source;  // position in eval_order
    double weight;
  };

  /// Throws InvariantError if the enabled connections contain a cycle.
  static Phenotype compile(const Genome& g);

  std::vector<double> evaluate(std::span<const double> x) const;

  /// Allocation-free variant; `scratch` is resized as needed.
  void evaluate_into(std::span<const double> x, std::span<double> out, std::vector<double>& scratch) const;

  std::size_t n_inputs() const { return input_slots_.size(); }
  std::size_t n_outputs() const { return output_slots_.size(); }

  const std::vector<NodeId>& eval_order() const { return order_; }
  std::span<const Incoming> incoming(std::size_t position) const;
  ActivationKind activation(std::size_t position) const { return activations_[position]; }
  std::size_t connection_count() const { return edges_.size(); }

  const std::vector<NodeId>& input_ids() const { return input_ids_; }
  const std::vector<NodeId>& output_ids() const { return output_ids_; }
  NodeId bias_id() const { return bias_id_; }

 private:
  std::vector<NodeId> order_;
  std::vector<ActivationKind> activations_;
  std::vector<NodeRole> roles_;
  std::vector<std::size_t> edge_begin_;  // CSR offsets, size order_.size() + 1
  std::vector<Incoming> edges_;
  std::vector<std::size_t> input_slots_;
  std::vector<std::size_t> output_slots_;
  std::size_t bias_slot_ = 0;
  std::vector<NodeId> input_ids_;
  std::vector<NodeId> output_ids_;
  NodeId bias_id_ = 0;
};

/// Mean over samples and target columns of the squared error.
double mse(const Phenotype& p, const Matrix& inputs, const Matrix& targets);

/// 1 if the single output is >= 0.5, else 0.
int classify(const Phenotype& p, std::span<const double> x);

/// MSE between thresholded predictions and the labels.
double label_mse(const Phenotype& p, const Matrix& inputs, const Matrix& targets);

}  // namespace haneat
