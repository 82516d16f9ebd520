#include "haneat/genome.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "haneat/errors.hpp"

namespace haneat {

namespace {

/// Dense adjacency over enabled connections, nodes indexed by position.
class EnabledGraph {
 public:
  explicit EnabledGraph(const Genome& g) : g_(g), out_(g.nodes.size()) {
    for (std::size_t c = 0; c < g.connections.size(); ++c) {
      const auto& conn = g.connections[c];
      if (!conn.enabled) continue;
      const auto s = index_of(conn.source);
      const auto t = index_of(conn.target);
      if (s && t) out_[*s].push_back({*t, c});
    }
  }

  std::optional<std::size_t> index_of(NodeId id) const {
    auto it = std::lower_bound(g_.nodes.begin(), g_.nodes.end(), id,
                               [](const NodeGene& n, NodeId v) { return n.id < v; });
    if (it == g_.nodes.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - g_.nodes.begin());
  }

  bool reaches(std::size_t from, std::size_t to) const {
    std::vector<char> seen(out_.size(), 0);
    std::vector<std::size_t> stack{from};
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      if (seen[v]) continue;
      seen[v] = 1;
      for (const auto& e : out_[v]) {
        if (!seen[e.node]) stack.push_back(e.node);
      }
    }
    return false;
  }

  /// Connection indices forming one directed cycle, empty if acyclic.
  std::vector<std::size_t> find_cycle() const {
    enum : char { white, grey, black };
    std::vector<char> color(out_.size(), white);
    std::vector<std::size_t> via(out_.size(), 0);  // connection used to enter node
    std::vector<std::size_t> parent(out_.size(), 0);
    for (std::size_t root = 0; root < out_.size(); ++root) {
      if (color[root] != white) continue;
      // Iterative DFS keeping an explicit edge cursor per frame.
      std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
      color[root] = grey;
      while (!frames.empty()) {
        auto& [v, cursor] = frames.back();
        if (cursor == out_[v].size()) {
          color[v] = black;
          frames.pop_back();
          continue;
        }
        const auto edge = out_[v][cursor++];
        if (color[edge.node] == white) {
          color[edge.node] = grey;
          parent[edge.node] = v;
          via[edge.node] = edge.connection;
          frames.emplace_back(edge.node, 0);
        } else if (color[edge.node] == grey) {
          std::vector<std::size_t> cycle{edge.connection};
          for (auto u = v; u != edge.node; u = parent[u]) cycle.push_back(via[u]);
          return cycle;
        }
      }
    }
    return {};
  }

 private:
  struct Edge {
    std::size_t node;
    std::size_t connection;
  };
  const Genome& g_;
  std::vector<std::vector<Edge>> out_;
};

void insert_node(Genome& g, const NodeGene& node) {
  auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), node.id,
                             [](const NodeGene& n, NodeId v) { return n.id < v; });
  g.nodes.insert(it, node);
}

void insert_connection(Genome& g, const ConnectionGene& conn) {
  auto it = std::lower_bound(g.connections.begin(), g.connections.end(), conn.innovation,
                             [](const ConnectionGene& c, Innovation v) { return c.innovation < v; });
  g.connections.insert(it, conn);
}

bool connected(const Genome& g, NodeId source, NodeId target) {
  return std::any_of(g.connections.begin(), g.connections.end(), [&](const ConnectionGene& c) {
    return c.source == source && c.target == target;
  });
}

std::string describe(const ConnectionGene& c) {
  return "connection " + std::to_string(c.innovation) + " (" + std::to_string(c.source) + "->" +
         std::to_string(c.target) + ")";
}

struct GeneAlignment {
  std::size_t matching = 0;
  std::size_t disjoint = 0;
  std::size_t excess = 0;
  double weight_difference = 0.0;
};

GeneAlignment align(const Genome& a, const Genome& b) {
  GeneAlignment out;
  const auto& ca = a.connections;
  const auto& cb = b.connections;
  const Innovation max_a = ca.empty() ? 0 : ca.back().innovation;
  const Innovation max_b = cb.empty() ? 0 : cb.back().innovation;
  std::size_t i = 0;
  std::size_t j = 0;
  auto unmatched = [&](Innovation innovation, bool in_a) {
    const bool other_empty = in_a ? cb.empty() : ca.empty();
    const Innovation other_max = in_a ? max_b : max_a;
    if (other_empty || innovation > other_max) {
      ++out.excess;
    } else {
      ++out.disjoint;
    }
  };
  while (i < ca.size() && j < cb.size()) {
    if (ca[i].innovation == cb[j].innovation) {
      ++out.matching;
      out.weight_difference += std::abs(ca[i].weight - cb[j].weight);
      ++i;
      ++j;
    } else if (ca[i].innovation < cb[j].innovation) {
      unmatched(ca[i++].innovation, true);
    } else {
      unmatched(cb[j++].innovation, false);
    }
  }
  for (; i < ca.size(); ++i) unmatched(ca[i].innovation, true);
  for (; j < cb.size(); ++j) unmatched(cb[j].innovation, false);
  return out;
}

}  // namespace

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::input:
      return "input";
    case NodeRole::bias:
      return "bias";
    case NodeRole::output:
      return "output";
    case NodeRole::hidden:
      return "hidden";
  }
  return "unknown";
}

std::optional<NodeRole> parse_role(std::string_view name) {
  for (auto role : {NodeRole::input, NodeRole::bias, NodeRole::output, NodeRole::hidden}) {
    if (to_string(role) == name) return role;
  }
  return std::nullopt;
}

const NodeGene* Genome::find_node(NodeId id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                             [](const NodeGene& n, NodeId v) { return n.id < v; });
  if (it == nodes.end() || it->id != id) return nullptr;
  return &*it;
}

std::size_t Genome::count(NodeRole role) const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [role](const NodeGene& n) { return n.role == role; }));
}

std::size_t Genome::enabled_connection_count() const {
  return static_cast<std::size_t>(std::count_if(
      connections.begin(), connections.end(), [](const ConnectionGene& c) { return c.enabled; }));
}

bool Genome::same_structure(const Genome& other) const {
  return nodes == other.nodes && connections == other.connections;
}

bool reaches(const Genome& g, NodeId source, NodeId target) {
  EnabledGraph graph(g);
  const auto s = graph.index_of(source);
  const auto t = graph.index_of(target);
  if (!s || !t) return false;
  return graph.reaches(*s, *t);
}

bool has_enabled_cycle(const Genome& g) { return !EnabledGraph(g).find_cycle().empty(); }

EdgeVerdict check_new_edge(const Genome& g, NodeId source, NodeId target) {
  const NodeGene* s = g.find_node(source);
  const NodeGene* t = g.find_node(target);
  if (s == nullptr || t == nullptr) return EdgeVerdict::unknown_node;
  if (source == target) return EdgeVerdict::self_loop;
  if (s->role == NodeRole::output || t->role == NodeRole::input || t->role == NodeRole::bias) {
    return EdgeVerdict::role_illegal;
  }
  if (connected(g, source, target)) return EdgeVerdict::duplicate;
  if (reaches(g, target, source)) return EdgeVerdict::cycle;
  return EdgeVerdict::ok;
}

void validate(const Genome& g) {
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    if (i > 0 && g.nodes[i - 1].id >= n.id) {
      throw InvariantError("node ids not strictly increasing at " + std::to_string(n.id));
    }
    if (n.role == NodeRole::hidden) {
      if (!is_hidden_kind(n.activation)) {
        throw InvariantError("hidden node " + std::to_string(n.id) + " has linear activation");
      }
    } else if (n.activation != ActivationKind::linear) {
      throw InvariantError("interface node " + std::to_string(n.id) + " is not linear");
    }
  }
  if (g.count(NodeRole::bias) != 1) throw InvariantError("genome must have exactly one bias node");
  std::set<std::pair<NodeId, NodeId>> endpoints;
  for (std::size_t i = 0; i < g.connections.size(); ++i) {
    const auto& c = g.connections[i];
    if (i > 0 && g.connections[i - 1].innovation >= c.innovation) {
      throw InvariantError("innovations not strictly increasing at " + describe(c));
    }
    const NodeGene* s = g.find_node(c.source);
    const NodeGene* t = g.find_node(c.target);
    if (s == nullptr || t == nullptr) throw InvariantError(describe(c) + " has a dangling endpoint");
    if (c.source == c.target) throw InvariantError(describe(c) + " is a self loop");
    if (s->role == NodeRole::output) throw InvariantError(describe(c) + " leaves an output node");
    if (t->role == NodeRole::input || t->role == NodeRole::bias) {
      throw InvariantError(describe(c) + " enters an input or bias node");
    }
    if (!endpoints.emplace(c.source, c.target).second) {
      throw InvariantError(describe(c) + " duplicates an existing edge");
    }
  }
  if (has_enabled_cycle(g)) throw InvariantError("enabled connections contain a cycle");
}

Genome minimal_genome(std::size_t n_inputs, std::size_t n_outputs, Rng& rng, double weight_range) {
  if (n_inputs == 0 || n_outputs == 0) {
    throw ConfigError("minimal_genome needs at least one input and one output");
  }
  Genome g;
  NodeId id = 0;
  for (std::size_t i = 0; i < n_inputs; ++i) g.nodes.push_back({id++, NodeRole::input, ActivationKind::linear});
  const NodeId bias = id;
  g.nodes.push_back({id++, NodeRole::bias, ActivationKind::linear});
  Innovation innovation = 0;
  for (std::size_t o = 0; o < n_outputs; ++o) {
    const NodeId out = id++;
    g.nodes.push_back({out, NodeRole::output, ActivationKind::linear});
    for (NodeId src = 0; src <= bias; ++src) {
      g.connections.push_back({innovation++, src, out, rng.uniform(-weight_range, weight_range), true});
    }
  }
  return g;
}

Genome mutate_add_node(Genome g, InnovationRegistry& innovations, Rng& rng,
                       std::span<const ActivationKind> catalog) {
  if (catalog.empty()) throw ConfigError("activation catalog is empty");
  std::vector<std::size_t> enabled;
  for (std::size_t i = 0; i < g.connections.size(); ++i) {
    if (g.connections[i].enabled) enabled.push_back(i);
  }
  if (enabled.empty()) return g;

  const std::size_t chosen = enabled[rng.index(enabled.size())];
  const ActivationKind kind = catalog[rng.index(catalog.size())];
  if (!is_hidden_kind(kind)) throw ConfigError("catalog contains a non-hidden activation");

  ConnectionGene split = g.connections[chosen];
  g.connections[chosen].enabled = false;

  InnovationRegistry::Split ids = innovations.split(split.innovation, kind);
  if (g.has_node(ids.node)) {
    ids = {innovations.fresh_node(), innovations.fresh_innovation(), innovations.fresh_innovation()};
  }
  insert_node(g, {ids.node, NodeRole::hidden, kind});
  insert_connection(g, {ids.incoming, split.source, ids.node, 1.0, true});
  insert_connection(g, {ids.outgoing, ids.node, split.target, split.weight, true});
  return g;
}

Genome mutate_add_connection(Genome g, InnovationRegistry& innovations, Rng& rng,
                             double weight_range, std::size_t attempts,
                             std::vector<EdgeAttempt>* trace) {
  std::vector<NodeId> sources;
  std::vector<NodeId> targets;
  for (const auto& n : g.nodes) {
    if (n.role != NodeRole::output) sources.push_back(n.id);
    if (n.role == NodeRole::hidden || n.role == NodeRole::output) targets.push_back(n.id);
  }
  if (sources.empty() || targets.empty()) return g;

  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    const NodeId s = sources[rng.index(sources.size())];
    const NodeId t = targets[rng.index(targets.size())];
    const EdgeVerdict verdict = check_new_edge(g, s, t);
    if (trace != nullptr) trace->push_back({s, t, verdict});
    if (verdict != EdgeVerdict::ok) continue;
    const Innovation innovation = innovations.connect(s, t);
    insert_connection(g, {innovation, s, t, rng.uniform(-weight_range, weight_range), true});
    return g;
  }
  return g;
}

Genome mutate_activation(Genome g, InnovationRegistry& innovations, Rng& rng,
                         std::span<const ActivationKind> catalog) {
  if (catalog.empty()) throw ConfigError("activation catalog is empty");
  std::vector<std::size_t> hidden;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes[i].role == NodeRole::hidden) hidden.push_back(i);
  }
  if (hidden.empty()) return g;

  const std::size_t position = hidden[rng.index(hidden.size())];
  const ActivationKind kind = catalog[rng.index(catalog.size())];
  if (!is_hidden_kind(kind)) throw ConfigError("catalog contains a non-hidden activation");
  if (kind == g.nodes[position].activation) return g;

  const NodeId old_id = g.nodes[position].id;
  const NodeId new_id = innovations.fresh_node();
  g.nodes.erase(g.nodes.begin() + static_cast<std::ptrdiff_t>(position));
  insert_node(g, {new_id, NodeRole::hidden, kind});

  // Connections are visited in innovation order, so renumbering is deterministic.
  for (auto& c : g.connections) {
    if (c.source != old_id && c.target != old_id) continue;
    if (c.source == old_id) c.source = new_id;
    if (c.target == old_id) c.target = new_id;
    c.innovation = innovations.fresh_innovation();
  }
  std::sort(g.connections.begin(), g.connections.end(),
            [](const ConnectionGene& a, const ConnectionGene& b) { return a.innovation < b.innovation; });
  return g;
}

Genome mutate_weights(Genome g, Rng& rng, double probability, double delta) {
  for (auto& c : g.connections) {
    if (rng.bernoulli(probability)) c.weight += rng.uniform(-delta, delta);
  }
  return g;
}

Genome mutate_toggle(Genome g, Rng& rng, double p_enable, double p_disable) {
  for (std::size_t i = 0; i < g.connections.size(); ++i) {
    const bool enable = rng.bernoulli(p_enable);
    const bool disable = rng.bernoulli(p_disable);
    auto& c = g.connections[i];
    if (enable && !c.enabled) {
      if (!reaches(g, c.target, c.source)) c.enabled = true;
    } else if (disable && c.enabled) {
      const NodeGene* target = g.find_node(c.target);
      if (target != nullptr && target->role == NodeRole::output) {
        const auto inflow = std::count_if(g.connections.begin(), g.connections.end(),
                                          [&](const ConnectionGene& o) { return o.enabled && o.target == c.target; });
        if (inflow <= 1) continue;
      }
      c.enabled = false;
    }
  }
  return g;
}

std::size_t break_cycles(Genome& g) {
  std::size_t dropped = 0;
  for (;;) {
    const auto cycle = EnabledGraph(g).find_cycle();
    if (cycle.empty()) return dropped;
    const auto newest = *std::max_element(cycle.begin(), cycle.end(), [&](std::size_t a, std::size_t b) {
      return g.connections[a].innovation < g.connections[b].innovation;
    });
    g.connections[newest].enabled = false;
    ++dropped;
  }
}

Genome crossover(const Genome& fitter, const Genome& other, Rng& rng, double disabled_inheritance) {
  auto interface_of = [](const Genome& g) {
    std::vector<NodeGene> out;
    for (const auto& n : g.nodes) {
      if (n.role != NodeRole::hidden) out.push_back(n);
    }
    return out;
  };
  if (interface_of(fitter) != interface_of(other)) {
    throw InvariantError("crossover parents have different input/output interfaces");
  }

  Genome child;
  const auto& cf = fitter.connections;
  const auto& co = other.connections;
  std::size_t j = 0;
  for (const auto& gene : cf) {
    while (j < co.size() && co[j].innovation < gene.innovation) ++j;
    if (j < co.size() && co[j].innovation == gene.innovation) {
      const ConnectionGene& mate = co[j];
      ConnectionGene inherited = rng.bernoulli(0.5) ? gene : mate;
      if (!gene.enabled || !mate.enabled) {
        inherited.enabled = !rng.bernoulli(disabled_inheritance);
      }
      child.connections.push_back(inherited);
    } else {
      child.connections.push_back(gene);
    }
  }

  std::map<NodeId, NodeGene> nodes;
  for (const auto& n : fitter.nodes) {
    if (n.role != NodeRole::hidden) nodes.emplace(n.id, n);
  }
  auto adopt = [&](NodeId id) {
    if (nodes.count(id) != 0) return;
    const NodeGene* n = fitter.find_node(id);
    if (n == nullptr) n = other.find_node(id);
    if (n == nullptr) throw InvariantError("crossover gene references unknown node " + std::to_string(id));
    nodes.emplace(id, *n);
  };
  for (const auto& c : child.connections) {
    adopt(c.source);
    adopt(c.target);
  }
  child.nodes.reserve(nodes.size());
  for (const auto& [id, n] : nodes) child.nodes.push_back(n);

  break_cycles(child);
  return child;
}

double compatibility_distance(const Genome& a, const Genome& b, const CompatibilityCoefficients& coeffs) {
  const GeneAlignment al = align(a, b);
  const std::size_t larger = std::max(a.connections.size(), b.connections.size());
  const double n = larger < 20 ? 1.0 : static_cast<double>(larger);
  const double mean_weight = al.matching == 0 ? 0.0 : al.weight_difference / static_cast<double>(al.matching);
  return coeffs.excess * static_cast<double>(al.excess) / n +
         coeffs.disjoint * static_cast<double>(al.disjoint) / n + coeffs.weight * mean_weight;
}

}  // namespace haneat
