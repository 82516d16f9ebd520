#pragma once

#include <cstdint>
#include <map>
#include <tuple>

#include "haneat/activation.hpp"

namespace haneat {

using NodeId = std::uint32_t;
using Innovation = std::uint32_t;

/// Issues node ids and innovation numbers.
///
/// Within one generation, the same structural mutation in different genomes
/// gets the same numbers: splitting connection `c` into a node of kind `k`, or
/// adding the edge `source -> target`. `new_generation()` clears the memo;
/// counters never go backwards.
class InnovationRegistry {
 public:
  struct Split {
    NodeId node;
    Innovation incoming;
    Innovation outgoing;
  };

  InnovationRegistry() = default;
  InnovationRegistry(NodeId next_node, Innovation next_innovation)
      : next_node_(next_node), next_innovation_(next_innovation) {}

  /// Registry positioned after the ids used by `minimal_genome(n_inputs, n_outputs)`.
  static InnovationRegistry for_interface(std::size_t n_inputs, std::size_t n_outputs);

  Split split(Innovation connection, ActivationKind kind);
  Innovation connect(NodeId source, NodeId target);

  NodeId fresh_node() { return next_node_++; }
  Innovation fresh_innovation() { return next_innovation_++; }

  void new_generation();

  NodeId next_node() const { return next_node_; }
  Innovation next_innovation() const { return next_innovation_; }
  std::size_t memo_size() const { return splits_.size() + edges_.size(); }

 private:
  NodeId next_node_ = 0;
  Innovation next_innovation_ = 0;
  std::map<std::tuple<Innovation, ActivationKind>, Split> splits_;
  std::map<std::tuple<NodeId, NodeId>, Innovation> edges_;
};

}  // namespace haneat
