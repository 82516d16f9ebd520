#include <nlohmann/json.hpp>

#include "haneat/errors.hpp"
#include "haneat/genome.hpp"

namespace haneat {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const Genome& g) {
  ordered_json doc;
  doc["nodes"] = ordered_json::array();
  for (const auto& n : g.nodes) {
    doc["nodes"].push_back({{"id", n.id}, {"role", to_string(n.role)}, {"activation", to_string(n.activation)}});
  }
  doc["connections"] = ordered_json::array();
  for (const auto& c : g.connections) {
    doc["connections"].push_back({{"innovation", c.innovation},
                                  {"source", c.source},
                                  {"target", c.target},
                                  {"weight", c.weight},
                                  {"enabled", c.enabled}});
  }
  doc["fitness"] = g.fitness;
  return doc.dump(2) + "\n";
}

Genome genome_from_json(std::string_view text) {
  Genome g;
  try {
    const auto doc = ordered_json::parse(text);
    for (const auto& n : doc.at("nodes")) {
      const auto role = parse_role(n.at("role").get<std::string>());
      const auto kind = parse_activation(n.at("activation").get<std::string>());
      if (!role || !kind) throw DataError("genome file: unknown role or activation");
      g.nodes.push_back({n.at("id").get<NodeId>(), *role, *kind});
    }
    for (const auto& c : doc.at("connections")) {
      g.connections.push_back({c.at("innovation").get<Innovation>(), c.at("source").get<NodeId>(),
                               c.at("target").get<NodeId>(), c.at("weight").get<double>(),
                               c.at("enabled").get<bool>()});
    }
    g.fitness = doc.at("fitness").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("genome file: ") + e.what());
  }
  try {
    validate(g);
  } catch (const InvariantError& e) {
    throw DataError(std::string("genome file: ") + e.what());
  }
  return g;
}

}  // namespace haneat
