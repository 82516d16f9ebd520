#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "haneat/activation.hpp"
#include "haneat/innovation.hpp"
#include "haneat/rng.hpp"

namespace haneat {

enum class NodeRole : std::uint8_t { input, bias, output, hidden };

std::string_view to_string(NodeRole role);
std::optional<NodeRole> parse_role(std::string_view name);

struct NodeGene {
  NodeId id = 0;
  NodeRole role = NodeRole::hidden;
  ActivationKind activation = ActivationKind::linear;

  friend bool operator==(const NodeGene&, const NodeGene&) = default;
};

struct ConnectionGene {
  Innovation innovation = 0;
  NodeId source = 0;
  NodeId target = 0;
  double weight = 0.0;
  bool enabled = true;

  friend bool operator==(const ConnectionGene&, const ConnectionGene&) = default;
};

/// Directly encoded network: node genes sorted by id, connection genes
/// sorted by innovation. The enabled-connection digraph is acyclic.
struct Genome {
  std::vector<NodeGene> nodes;
  std::vector<ConnectionGene> connections;
  double fitness = 0.0;
  double adjusted_fitness = 0.0;

  const NodeGene* find_node(NodeId id) const;
  bool has_node(NodeId id) const { return find_node(id) != nullptr; }

  std::size_t count(NodeRole role) const;
  std::size_t hidden_count() const { return count(NodeRole::hidden); }
  std::size_t enabled_connection_count() const;

  /// Same nodes and connections; cached fitness values are ignored.
  bool same_structure(const Genome& other) const;
};

struct CompatibilityCoefficients {
  double excess = 1.0;
  double disjoint = 1.0;
  double weight = 0.2;
};

// ---------------------------------------------------------------------------
// Structural queries

/// True if `target` is reachable from `source` over enabled connections.
bool reaches(const Genome& g, NodeId source, NodeId target);
bool has_enabled_cycle(const Genome& g);

enum class EdgeVerdict { ok, self_loop, role_illegal, duplicate, cycle, unknown_node };

/// Whether adding an enabled `source -> target` connection keeps `g` valid.
EdgeVerdict check_new_edge(const Genome& g, NodeId source, NodeId target);

/// Throws InvariantError when any genome invariant is violated.
void validate(const Genome& g);

// ---------------------------------------------------------------------------
// Operators. Each takes a genome by value and returns the offspring.

/// Inputs, one bias node and outputs, fully connected input/bias -> output.
/// Node ids are 0..n_inputs-1 (inputs), n_inputs (bias), then outputs;
/// innovations are 0..(n_inputs+1)*n_outputs-1 in (output, source) order.
Genome minimal_genome(std::size_t n_inputs, std::size_t n_outputs, Rng& rng,
                      double weight_range = 2.0);

/// Splits a uniformly chosen enabled connection with a new hidden node whose
/// activation is drawn uniformly from `catalog`.
Genome mutate_add_node(Genome g, InnovationRegistry& innovations, Rng& rng,
                       std::span<const ActivationKind> catalog);

struct EdgeAttempt {
  NodeId source;
  NodeId target;
  EdgeVerdict verdict;
};

/// Adds one new enabled connection, resampling illegal candidates up to
/// `attempts` times. Every sampled candidate is appended to `trace` if given.
Genome mutate_add_connection(Genome g, InnovationRegistry& innovations, Rng& rng,
                             double weight_range = 2.0, std::size_t attempts = 20,
                             std::vector<EdgeAttempt>* trace = nullptr);

/// Redraws the activation of one uniformly chosen hidden node. When the kind
/// changes, the node gets a fresh id and every incident connection a fresh
/// innovation number.
Genome mutate_activation(Genome g, InnovationRegistry& innovations, Rng& rng,
                         std::span<const ActivationKind> catalog);

Genome mutate_weights(Genome g, Rng& rng, double probability, double delta);

/// Per gene, enables with `p_enable` unless that would close a cycle, and
/// disables with `p_disable` unless that would leave an output without any
/// enabled incoming connection.
Genome mutate_toggle(Genome g, Rng& rng, double p_enable, double p_disable);

/// NEAT crossover; `fitter` supplies disjoint and excess genes.
Genome crossover(const Genome& fitter, const Genome& other, Rng& rng,
                 double disabled_inheritance = 0.75);

/// Disables enabled genes on cycles, highest innovation first, until acyclic.
/// Returns the number of genes disabled.
std::size_t break_cycles(Genome& g);

double compatibility_distance(const Genome& a, const Genome& b,
                              const CompatibilityCoefficients& coeffs = {});

// ---------------------------------------------------------------------------
// Genome file format

/// Stable-key-order JSON: {"nodes": [...], "connections": [...], "fitness": f}.
std::string to_json(const Genome& g);
Genome genome_from_json(std::string_view text);

}  // namespace haneat
