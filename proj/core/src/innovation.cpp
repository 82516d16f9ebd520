#include "haneat/innovation.hpp"

namespace haneat {

InnovationRegistry InnovationRegistry::for_interface(std::size_t n_inputs, std::size_t n_outputs) {
  const auto nodes = static_cast<NodeId>(n_inputs + 1 + n_outputs);
  const auto connections = static_cast<Innovation>((n_inputs + 1) * n_outputs);
  return InnovationRegistry(nodes, connections);
}

InnovationRegistry::Split InnovationRegistry::split(Innovation connection, ActivationKind kind) {
  const auto key = std::make_tuple(connection, kind);
  if (auto it = splits_.find(key); it != splits_.end()) return it->second;
  Split s{};
  s.node = fresh_node();
  s.incoming = fresh_innovation();
  s.outgoing = fresh_innovation();
  splits_.emplace(key, s);
  return s;
}

Innovation InnovationRegistry::connect(NodeId source, NodeId target) {
  const auto key = std::make_tuple(source, target);
  if (auto it = edges_.find(key); it != edges_.end()) return it->second;
  const Innovation id = fresh_innovation();
  edges_.emplace(key, id);
  return id;
}

void InnovationRegistry::new_generation() {
  splits_.clear();
  edges_.clear();
}

}  // namespace haneat
