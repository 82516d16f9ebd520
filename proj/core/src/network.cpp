#include "haneat/network.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "haneat/errors.hpp"

namespace haneat {

Phenotype Phenotype::compile(const Genome& g) {
  const std::size_t n = g.nodes.size();
  auto index_of = [&](NodeId id) -> std::size_t {
    auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), id,
                               [](const NodeGene& node, NodeId v) { return node.id < v; });
    if (it == g.nodes.end() || it->id != id) {
      throw InvariantError("connection references unknown node " + std::to_string(id));
    }
    return static_cast<std::size_t>(it - g.nodes.begin());
  };

  std::vector<std::vector<std::size_t>> successors(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& c : g.connections) {
    if (!c.enabled) continue;
    const auto s = index_of(c.source);
    const auto t = index_of(c.target);
    successors[s].push_back(t);
    ++indegree[t];
  }

  // Kahn's algorithm; nodes are sorted by id, so the smallest index is the smallest id.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    const auto v = ready.top();
    ready.pop();
    topo.push_back(v);
    for (auto t : successors[v]) {
      if (--indegree[t] == 0) ready.push(t);
    }
  }
  if (topo.size() != n) throw InvariantError("cannot compile genome: enabled connections contain a cycle");

  Phenotype p;
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[topo[k]] = k;

  p.order_.resize(n);
  p.activations_.resize(n);
  p.roles_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& node = g.nodes[topo[k]];
    p.order_[k] = node.id;
    p.activations_[k] = node.activation;
    p.roles_[k] = node.role;
  }

  std::vector<std::vector<Incoming>> inbound(n);
  for (const auto& c : g.connections) {
    if (!c.enabled) continue;
    inbound[position[index_of(c.target)]].push_back({position[index_of(c.source)], c.weight});
  }
  p.edge_begin_.assign(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    p.edge_begin_[k + 1] = p.edge_begin_[k] + inbound[k].size();
    p.edges_.insert(p.edges_.end(), inbound[k].begin(), inbound[k].end());
  }

  bool have_bias = false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = g.nodes[i];
    switch (node.role) {
      case NodeRole::input:
        p.input_slots_.push_back(position[i]);
        p.input_ids_.push_back(node.id);
        break;
      case NodeRole::output:
        p.output_slots_.push_back(position[i]);
        p.output_ids_.push_back(node.id);
        break;
      case NodeRole::bias:
        p.bias_slot_ = position[i];
        p.bias_id_ = node.id;
        have_bias = true;
        break;
      case NodeRole::hidden:
        break;
    }
  }
  if (!have_bias) throw InvariantError("cannot compile genome without a bias node");
  return p;
}

std::span<const Phenotype::Incoming> Phenotype::incoming(std::size_t position) const {
  return {edges_.data() + edge_begin_[position], edge_begin_[position + 1] - edge_begin_[position]};
}

void Phenotype::evaluate_into(std::span<const double> x, std::span<double> out,
                              std::vector<double>& scratch) const {
  if (x.size() != input_slots_.size()) {
    throw ConfigError("evaluate: expected " + std::to_string(input_slots_.size()) + " inputs, got " +
                      std::to_string(x.size()));
  }
  if (out.size() != output_slots_.size()) throw ConfigError("evaluate: output buffer has wrong size");
  scratch.assign(order_.size(), 0.0);
  for (std::size_t i = 0; i < input_slots_.size(); ++i) scratch[input_slots_[i]] = x[i];
  scratch[bias_slot_] = 1.0;
  for (std::size_t k = 0; k < order_.size(); ++k) {
    if (roles_[k] == NodeRole::input || roles_[k] == NodeRole::bias) continue;
    double sum = 0.0;
    for (std::size_t e = edge_begin_[k]; e < edge_begin_[k + 1]; ++e) {
      sum += edges_[e].weight * scratch[edges_[e].source];
    }
    scratch[k] = apply(activations_[k], sum);
  }
  for (std::size_t o = 0; o < output_slots_.size(); ++o) out[o] = scratch[output_slots_[o]];
}

std::vector<double> Phenotype::evaluate(std::span<const double> x) const {
  std::vector<double> out(output_slots_.size());
  std::vector<double> scratch;
  evaluate_into(x, out, scratch);
  return out;
}

namespace {

template <typename Transform>
double squared_error(const Phenotype& p, const Matrix& inputs, const Matrix& targets, Transform transform) {
  if (inputs.rows() != targets.rows()) throw ConfigError("mse: input and target row counts differ");
  if (inputs.rows() == 0) throw ConfigError("mse: empty dataset");
  if (targets.cols() != p.n_outputs()) throw ConfigError("mse: target width does not match outputs");
  std::vector<double> out(p.n_outputs());
  std::vector<double> scratch;
  double total = 0.0;
  for (std::size_t r = 0; r < inputs.rows(); ++r) {
    p.evaluate_into(inputs.row(r), out, scratch);
    const auto y = targets.row(r);
    for (std::size_t c = 0; c < out.size(); ++c) {
      const double err = transform(out[c]) - y[c];
      total += err * err;
    }
  }
  return total / static_cast<double>(inputs.rows() * targets.cols());
}

}  // namespace

double mse(const Phenotype& p, const Matrix& inputs, const Matrix& targets) {
  return squared_error(p, inputs, targets, [](double v) { return v; });
}

int classify(const Phenotype& p, std::span<const double> x) {
  if (p.n_outputs() != 1) throw ConfigError("classify requires a single-output network");
  return p.evaluate(x)[0] >= 0.5 ? 1 : 0;
}

double label_mse(const Phenotype& p, const Matrix& inputs, const Matrix& targets) {
  return squared_error(p, inputs, targets, [](double v) { return v >= 0.5 ? 1.0 : 0.0; });
}

}  // namespace haneat
