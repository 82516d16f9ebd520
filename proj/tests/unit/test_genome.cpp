#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "haneat/errors.hpp"
#include "haneat/genome.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace haneat {
namespace {

std::set<Innovation> innovations_of(const Genome& g) {
  std::set<Innovation> out;
  for (const auto& c : g.connections) out.insert(c.innovation);
  return out;
}

const ConnectionGene* gene(const Genome& g, Innovation innovation) {
  for (const auto& c : g.connections) {
    if (c.innovation == innovation) return &c;
  }
  return nullptr;
}

TEST(MinimalGenome, TwoInputsOneOutput) {
  Rng rng(1);
  const Genome g = minimal_genome(2, 1, rng);
  EXPECT_EQ(g.nodes.size(), 4u);
  EXPECT_EQ(g.connections.size(), 3u);
  EXPECT_EQ(g.hidden_count(), 0u);
  EXPECT_NO_THROW(validate(g));
  for (const auto& n : g.nodes) EXPECT_EQ(n.activation, ActivationKind::linear);
  for (const auto& c : g.connections) {
    EXPECT_GE(c.weight, -2.0);
    EXPECT_LE(c.weight, 2.0);
    EXPECT_TRUE(c.enabled);
  }
}

TEST(MinimalGenome, ConnectionCountMatchesEnumeration) {
  Rng rng(2);
  const Genome g = minimal_genome(21, 3, rng);
  std::set<std::pair<NodeId, NodeId>> expected;
  for (const auto& s : g.nodes) {
    for (const auto& t : g.nodes) {
      if ((s.role == NodeRole::input || s.role == NodeRole::bias) && t.role == NodeRole::output) {
        expected.emplace(s.id, t.id);
      }
    }
  }
  std::set<std::pair<NodeId, NodeId>> actual;
  for (const auto& c : g.connections) actual.emplace(c.source, c.target);
  EXPECT_EQ(g.nodes.size(), 25u);
  EXPECT_EQ(expected.size(), 66u);
  EXPECT_EQ(actual, expected);
  EXPECT_FALSE(oracle::has_cycle(g));
}

TEST(MinimalGenome, RejectsEmptyInterface) {
  Rng rng(3);
  EXPECT_THROW(minimal_genome(0, 1, rng), ConfigError);
  EXPECT_THROW(minimal_genome(2, 0, rng), ConfigError);
}

TEST(AddNode, SplitsOneConnection) {
  Rng rng(4);
  auto reg = InnovationRegistry::for_interface(2, 1);
  const Genome before = minimal_genome(2, 1, rng);
  const Genome after = mutate_add_node(before, reg, rng, hidden_catalog());
  EXPECT_EQ(after.nodes.size(), 5u);
  EXPECT_EQ(after.connections.size(), 5u);
  EXPECT_EQ(after.enabled_connection_count(), 4u);
  ASSERT_EQ(after.hidden_count(), 1u);
  const auto hidden = *std::find_if(after.nodes.begin(), after.nodes.end(),
                                    [](const NodeGene& n) { return n.role == NodeRole::hidden; });
  EXPECT_TRUE(is_hidden_kind(hidden.activation));

  const auto disabled = *std::find_if(after.connections.begin(), after.connections.end(),
                                      [](const ConnectionGene& c) { return !c.enabled; });
  const auto* in = std::find_if(after.connections.data(), after.connections.data() + after.connections.size(),
                                [&](const ConnectionGene& c) { return c.target == hidden.id; });
  const auto* out = std::find_if(after.connections.data(), after.connections.data() + after.connections.size(),
                                 [&](const ConnectionGene& c) { return c.source == hidden.id; });
  EXPECT_EQ(in->source, disabled.source);
  EXPECT_EQ(in->weight, 1.0);
  EXPECT_EQ(out->target, disabled.target);
  EXPECT_EQ(out->weight, disabled.weight);
  EXPECT_NO_THROW(validate(after));
}

TEST(AddNode, NoEnabledConnectionIsNoOp) {
  Rng rng(5);
  auto reg = InnovationRegistry::for_interface(2, 1);
  Genome g = minimal_genome(2, 1, rng);
  for (auto& c : g.connections) c.enabled = false;
  EXPECT_TRUE(mutate_add_node(g, reg, rng, hidden_catalog()).same_structure(g));
}

TEST(AddNode, SameSplitInOneGenerationSharesNumbers) {
  Rng rng(6);
  auto reg = InnovationRegistry::for_interface(3, 2);
  const Genome parent = minimal_genome(3, 2, rng);
  // Per-generation memo kept by the test: (split innovation, kind) -> (node, in, out).
  std::map<std::pair<Innovation, ActivationKind>, std::tuple<NodeId, Innovation, Innovation>> memo;
  for (int generation = 0; generation < 3; ++generation) {
    reg.new_generation();
    memo.clear();
    for (int i = 0; i < 60; ++i) {
      const Genome child = mutate_add_node(parent, reg, rng, hidden_catalog());
      const auto& split = *std::find_if(child.connections.begin(), child.connections.end(),
                                        [](const ConnectionGene& c) { return !c.enabled; });
      const auto& node = child.nodes.back();
      ASSERT_EQ(node.role, NodeRole::hidden);
      Innovation in = 0, out = 0;
      for (const auto& c : child.connections) {
        if (c.target == node.id) in = c.innovation;
        if (c.source == node.id) out = c.innovation;
      }
      const auto key = std::make_pair(split.innovation, node.activation);
      const auto value = std::make_tuple(node.id, in, out);
      auto [it, inserted] = memo.emplace(key, value);
      if (!inserted) {
        EXPECT_EQ(it->second, value);
      }
    }
  }
}

TEST(AddNode, FreshNumbersAcrossGenerations) {
  Rng rng(7);
  auto reg = InnovationRegistry::for_interface(1, 1);
  const Genome parent = minimal_genome(1, 1, rng);
  const ActivationKind only[] = {ActivationKind::relu};
  Genome first = parent;
  while (first.connections[0].enabled) first = mutate_add_node(parent, reg, rng, only);
  reg.new_generation();
  Genome second = parent;
  while (second.connections[0].enabled) second = mutate_add_node(parent, reg, rng, only);
  EXPECT_NE(first.nodes.back().id, second.nodes.back().id);
}

TEST(AddConnection, FullyConnectedMinimalIsNoOp) {
  Rng rng(8);
  auto reg = InnovationRegistry::for_interface(3, 2);
  const Genome g = minimal_genome(3, 2, rng);
  std::vector<EdgeAttempt> trace;
  EXPECT_TRUE(mutate_add_connection(g, reg, rng, 2.0, 20, &trace).same_structure(g));
  EXPECT_EQ(trace.size(), 20u);
}

TEST(AddConnection, CycleCandidateRejected) {
  Genome g = fixture::hub_genome();
  // 11 -> 10 would close 10 -> 11 -> 10.
  EXPECT_EQ(check_new_edge(g, 11, 10), EdgeVerdict::cycle);
  EXPECT_EQ(check_new_edge(g, 3, 10), EdgeVerdict::role_illegal);
  EXPECT_EQ(check_new_edge(g, 10, 0), EdgeVerdict::role_illegal);
  EXPECT_EQ(check_new_edge(g, 10, 2), EdgeVerdict::role_illegal);
  EXPECT_EQ(check_new_edge(g, 10, 10), EdgeVerdict::self_loop);
  EXPECT_EQ(check_new_edge(g, 0, 3), EdgeVerdict::duplicate);
  EXPECT_EQ(check_new_edge(g, 0, 11), EdgeVerdict::ok);
  EXPECT_EQ(check_new_edge(g, 0, 99), EdgeVerdict::unknown_node);
}

TEST(AddConnection, KeepsRandomGenomesAcyclic) {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    Genome g = oracle::random_genome(rng);
    InnovationRegistry reg(1000, 1000);
    for (int k = 0; k < 5; ++k) {
      g = mutate_add_connection(std::move(g), reg, rng);
      ASSERT_FALSE(oracle::has_cycle(g));
    }
    EXPECT_NO_THROW(validate(g));
  }
}

TEST(MutateActivation, NoHiddenNodesIsNoOp) {
  Rng rng(10);
  auto reg = InnovationRegistry::for_interface(2, 1);
  const Genome g = minimal_genome(2, 1, rng);
  EXPECT_TRUE(mutate_activation(g, reg, rng, hidden_catalog()).same_structure(g));
}

TEST(MutateActivation, SameKindRedrawIsNoOp) {
  Rng rng(11);
  InnovationRegistry reg(100, 100);
  Genome g = fixture::hub_genome();
  g.nodes[5].activation = ActivationKind::sigmoid;  // both hidden nodes sigmoid
  const ActivationKind only[] = {ActivationKind::sigmoid};
  EXPECT_TRUE(mutate_activation(g, reg, rng, only).same_structure(g));
  EXPECT_EQ(reg.next_innovation(), 100u);
}

TEST(MutateActivation, RenumbersExactlyTheIncidentConnections) {
  Genome pre = fixture::hub_genome();
  pre.nodes[5].activation = ActivationKind::step;
  // Catalog without sigmoid forces a change on node 10; node 11 is the other candidate.
  const ActivationKind others[] = {ActivationKind::gaussian};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    InnovationRegistry reg(12, 12);
    const Genome post = mutate_activation(pre, reg, rng, others);
    ASSERT_NO_THROW(validate(post));
    const bool hit_hub = post.find_node(10) == nullptr;
    const NodeId old_id = hit_hub ? 10 : 11;
    const std::size_t incident = hit_hub ? 5 : 3;
    const auto& renamed = post.nodes.back();
    EXPECT_EQ(renamed.id, 12u);
    EXPECT_EQ(renamed.activation, ActivationKind::gaussian);

    std::multiset<std::pair<double, bool>> pre_pairs, post_pairs;
    for (const auto& c : pre.connections) {
      if (c.source == old_id || c.target == old_id) pre_pairs.emplace(c.weight, c.enabled);
    }
    std::size_t fresh = 0;
    for (const auto& c : post.connections) {
      if (c.source == renamed.id || c.target == renamed.id) {
        post_pairs.emplace(c.weight, c.enabled);
        EXPECT_GE(c.innovation, 12u);
        ++fresh;
      } else {
        EXPECT_NE(gene(pre, c.innovation), nullptr);
        EXPECT_EQ(*gene(pre, c.innovation), c);
      }
    }
    EXPECT_EQ(fresh, incident);
    EXPECT_EQ(pre_pairs, post_pairs);
    EXPECT_EQ(reg.next_innovation(), 12u + incident);
    EXPECT_GT(compatibility_distance(pre, post), 0.0);
  }
}

TEST(MutateActivation, RenumbersDisabledConnectionsToo) {
  Genome pre = fixture::hub_genome();
  pre.connections[4].enabled = false;  // innovation 6, 1 -> 10
  pre.nodes[5].activation = ActivationKind::gaussian;
  const ActivationKind only[] = {ActivationKind::gaussian};
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    InnovationRegistry reg(12, 12);
    const Genome post = mutate_activation(pre, reg, rng, only);
    if (post.find_node(10) != nullptr) {
      EXPECT_TRUE(post.same_structure(pre));  // node 11 was drawn and kept its kind
      continue;
    }
    ++seen;
    std::size_t disabled_fresh = 0;
    for (const auto& c : post.connections) {
      if (c.innovation >= 12 && !c.enabled) ++disabled_fresh;
    }
    EXPECT_EQ(disabled_fresh, 1u);
  }
  EXPECT_GT(seen, 0);
}

// Distances worked out by hand: every renumbered gene becomes excess in the
// mutated genome and disjoint in the original; weights are unchanged.
TEST(MutateActivation, DistanceToParentMatchesHandCount) {
  Genome pre = fixture::hub_genome();
  pre.nodes[5].activation = ActivationKind::step;
  const ActivationKind others[] = {ActivationKind::gaussian};
  bool saw_hub = false, saw_tail = false;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    InnovationRegistry reg(12, 12);
    const Genome post = mutate_activation(pre, reg, rng, others);
    const double d = compatibility_distance(pre, post, {1.0, 1.0, 0.2});
    if (post.find_node(10) == nullptr) {
      saw_hub = true;
      EXPECT_NEAR(d, 10.0, 1e-12);  // E = 5, D = 5, N = 1
    } else {
      saw_tail = true;
      EXPECT_NEAR(d, 6.0, 1e-12);  // E = 3, D = 3, N = 1
    }
  }
  EXPECT_TRUE(saw_hub && saw_tail);

  const Genome wide = fixture::wide_genome();
  for (std::uint64_t seed = 0;; ++seed) {
    ASSERT_LT(seed, 500u);
    Rng rng(seed);
    InnovationRegistry reg(100, 26);
    const ActivationKind relu_only[] = {ActivationKind::relu};  // node 22 is gaussian
    const Genome post = mutate_activation(wide, reg, rng, relu_only);
    if (post.find_node(22) != nullptr || post.same_structure(wide)) continue;
    EXPECT_NEAR(compatibility_distance(wide, post, {1.0, 1.0, 0.2}), 8.0 / 26.0, 1e-12);
    break;
  }
}

TEST(MutateWeights, ZeroProbabilityOrMagnitudeIsNoOp) {
  Rng rng(12);
  const Genome g = fixture::hub_genome();
  EXPECT_TRUE(mutate_weights(g, rng, 0.0, 2.0).same_structure(g));
  EXPECT_TRUE(mutate_weights(g, rng, 1.0, 0.0).same_structure(g));
}

TEST(MutateWeights, PerturbationBoundedByDelta) {
  Rng rng(13);
  const Genome g = fixture::hub_genome();
  for (int i = 0; i < 200; ++i) {
    const Genome m = mutate_weights(g, rng, 1.0, 2.0);
    ASSERT_EQ(m.connections.size(), g.connections.size());
    for (std::size_t k = 0; k < g.connections.size(); ++k) {
      EXPECT_LE(std::abs(m.connections[k].weight - g.connections[k].weight), 2.0);
      EXPECT_EQ(m.connections[k].innovation, g.connections[k].innovation);
    }
  }
}

TEST(MutateToggle, ZeroRatesIsNoOp) {
  Rng rng(14);
  const Genome g = fixture::hub_genome();
  EXPECT_TRUE(mutate_toggle(g, rng, 0.0, 0.0).same_structure(g));
}

TEST(MutateToggle, FullDisableReachesAFixedPoint) {
  Rng rng(15);
  const Genome once = mutate_toggle(fixture::hub_genome(), rng, 0.0, 1.0);
  EXPECT_FALSE(gene(once, 0)->enabled);
  EXPECT_TRUE(once.same_structure(mutate_toggle(once, rng, 0.0, 1.0)));
}

TEST(MutateToggle, NeverOrphansAnOutput) {
  Rng rng(16);
  const Genome g = minimal_genome(3, 2, rng);
  const Genome m = mutate_toggle(g, rng, 0.0, 1.0);
  for (const auto& n : m.nodes) {
    if (n.role != NodeRole::output) continue;
    const auto inflow = std::count_if(m.connections.begin(), m.connections.end(),
                                      [&](const ConnectionGene& c) { return c.enabled && c.target == n.id; });
    EXPECT_EQ(inflow, 1);
  }
}

TEST(MutateToggle, EnableThatWouldCloseACycleIsRejected) {
  Genome g = fixture::hub_genome();
  // Disabled back edge 11 -> 10: enabling it would close 10 -> 11 -> 10.
  g.connections.push_back({12, 11, 10, 0.4, false});
  ASSERT_FALSE(oracle::has_cycle(g));
  Genome flipped = g;
  flipped.connections.back().enabled = true;
  ASSERT_TRUE(oracle::has_cycle(flipped));
  Rng rng(17);
  const Genome m = mutate_toggle(g, rng, 1.0, 0.0);
  EXPECT_FALSE(gene(m, 12)->enabled);
  EXPECT_TRUE(gene(m, 0)->enabled);  // harmless re-enable goes through
  EXPECT_FALSE(oracle::has_cycle(m));
}

TEST(Crossover, SelfCrossPreservesStructure) {
  Rng rng(18);
  Genome g = fixture::hub_genome();
  g.connections[0].enabled = true;
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(crossover(g, g, rng).same_structure(g));
}

TEST(Crossover, InheritsFitterGenesAndParentWeights) {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    Genome a = fixture::hub_genome();
    Genome b = fixture::hub_genome();
    InnovationRegistry reg(12, 12);
    a = mutate_weights(std::move(a), rng, 1.0, 1.0);
    b = mutate_weights(std::move(b), rng, 1.0, 1.0);
    b = mutate_activation(std::move(b), reg, rng, hidden_catalog());
    a = mutate_add_connection(std::move(a), reg, rng);
    const Genome child = crossover(a, b, rng);
    ASSERT_NO_THROW(validate(child));
    EXPECT_EQ(innovations_of(child), innovations_of(a));
    for (const auto& c : child.connections) {
      const auto* fa = gene(a, c.innovation);
      const auto* fb = gene(b, c.innovation);
      ASSERT_NE(fa, nullptr);
      EXPECT_TRUE(c.weight == fa->weight || (fb != nullptr && c.weight == fb->weight));
    }
  }
}

TEST(Crossover, ExcessGenesComeFromFitter) {
  Rng rng(20);
  Genome fitter = fixture::hub_genome();
  Genome other = fixture::hub_genome();
  other.connections.resize(6);  // innovations 0..7 only
  other.nodes.pop_back();       // node 11 is no longer referenced
  const Genome child = crossover(fitter, other, rng);
  for (Innovation inn : {8u, 9u, 10u, 11u}) EXPECT_NE(gene(child, inn), nullptr);
  const Genome reversed = crossover(other, fitter, rng);
  for (Innovation inn : {8u, 9u, 10u, 11u}) EXPECT_EQ(gene(reversed, inn), nullptr);
}

TEST(Crossover, MatchingGenesSplitEvenly) {
  Genome fitter;
  fitter.nodes = {{0, NodeRole::input, ActivationKind::linear},
                  {1, NodeRole::bias, ActivationKind::linear},
                  {2, NodeRole::output, ActivationKind::linear},
                  {7, NodeRole::hidden, ActivationKind::relu}};
  fitter.connections = {{0, 0, 2, 1.0, true}, {1, 1, 2, 2.0, true}, {4, 0, 7, 3.0, true}};
  Genome other = fitter;
  other.nodes.pop_back();
  other.connections = {{0, 0, 2, -1.0, true}, {1, 1, 2, -2.0, true}};
  Rng rng(21);
  int from_other = 0;
  const int trials = 4000;
  for (int i = 0; i < trials; ++i) {
    const Genome child = crossover(fitter, other, rng);
    ASSERT_EQ(child.connections.size(), 3u);
    if (child.connections[0].weight == -1.0) ++from_other;
    EXPECT_EQ(child.connections[2].weight, 3.0);
  }
  EXPECT_NEAR(static_cast<double>(from_other) / trials, 0.5, 0.04);
}

TEST(Crossover, DisabledInheritanceRate) {
  Genome a = fixture::hub_genome();
  Genome b = fixture::hub_genome();
  a.connections[1].enabled = false;  // innovation 1, enabled in b
  Rng rng(22);
  int disabled = 0;
  const int trials = 4000;
  for (int i = 0; i < trials; ++i) {
    if (!gene(crossover(a, b, rng), 1)->enabled) ++disabled;
  }
  EXPECT_NEAR(static_cast<double>(disabled) / trials, 0.75, 0.03);
}

TEST(Crossover, RepairsCyclesByDroppingNewestGene) {
  Genome fitter = fixture::hub_genome();
  fitter.connections.push_back({12, 11, 10, 0.4, false});
  Genome other = fitter;
  other.connections.back().enabled = true;  // 11 -> 10 enabled
  std::erase_if(other.connections, [](const ConnectionGene& c) { return c.innovation == 9; });  // no 10 -> 11
  ASSERT_FALSE(oracle::has_cycle(other));
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const Genome child = crossover(fitter, other, rng, 0.0);  // 0.0: disabled genes re-enable
    EXPECT_FALSE(oracle::has_cycle(child));
    EXPECT_FALSE(gene(child, 12)->enabled);
    EXPECT_TRUE(gene(child, 9)->enabled);
  }
}

TEST(Crossover, InterfaceMismatchIsInternalError) {
  Rng rng(24);
  EXPECT_THROW(crossover(minimal_genome(2, 1, rng), minimal_genome(3, 1, rng), rng), InvariantError);
}

TEST(Compatibility, HandCountedCases) {
  Genome a;
  a.connections = {{1, 0, 2, 0.0, true}, {2, 1, 2, 0.0, true}, {3, 0, 3, 0.0, true}};
  Genome b;
  b.connections = {{1, 0, 2, 0.0, true}, {2, 1, 2, 0.0, true}};
  const CompatibilityCoefficients coeffs{1.0, 1.0, 0.2};
  EXPECT_DOUBLE_EQ(compatibility_distance(a, b, coeffs), 1.0);
  EXPECT_EQ(compatibility_distance(a, a, coeffs), 0.0);

  // One disjoint (2 in a), one excess (5 in b), matching 1 and 3 with |dw| 0.5 and 1.5.
  Genome c;
  c.connections = {{1, 0, 2, 1.0, true}, {2, 1, 2, 0.0, true}, {3, 0, 3, 0.0, true}};
  Genome d;
  d.connections = {{1, 0, 2, 1.5, true}, {3, 0, 3, -1.5, true}, {5, 1, 3, 0.0, true}};
  EXPECT_DOUBLE_EQ(compatibility_distance(c, d, {2.0, 3.0, 0.2}), 2.0 * 1 + 3.0 * 1 + 0.2 * 1.0);
}

TEST(Compatibility, NormalizesLargeGenomes) {
  const Genome wide = fixture::wide_genome();
  ASSERT_EQ(wide.connections.size(), 26u);
  Genome shorter = wide;
  shorter.connections.resize(20);
  // 6 excess genes, N = 26.
  EXPECT_DOUBLE_EQ(compatibility_distance(wide, shorter), 6.0 / 26.0);
}

TEST(Compatibility, SymmetricOnRandomPairs) {
  Rng rng(25);
  for (int i = 0; i < 300; ++i) {
    const Genome a = oracle::random_genome(rng);
    const Genome b = oracle::random_genome(rng);
    EXPECT_EQ(compatibility_distance(a, b), compatibility_distance(b, a));
    EXPECT_EQ(compatibility_distance(a, a), 0.0);
  }
}

// Random operator sequences keep every genome invariant.
TEST(GenomeInvariants, HoldUnderRandomOperatorSequences) {
  Rng rng(26);
  for (int trial = 0; trial < 40; ++trial) {
    auto reg = InnovationRegistry::for_interface(3, 2);
    std::vector<Genome> pool;
    for (int i = 0; i < 6; ++i) pool.push_back(minimal_genome(3, 2, rng));
    for (int gen = 0; gen < 40; ++gen) {
      reg.new_generation();
      for (auto& g : pool) {
        const auto& mate = pool[rng.index(pool.size())];
        Genome child = crossover(g, mate, rng);
        switch (rng.index(5)) {
          case 0:
            child = mutate_add_node(std::move(child), reg, rng, hidden_catalog());
            break;
          case 1:
            child = mutate_add_connection(std::move(child), reg, rng);
            break;
          case 2:
            child = mutate_activation(std::move(child), reg, rng, hidden_catalog());
            break;
          case 3:
            child = mutate_toggle(std::move(child), rng, 0.3, 0.3);
            break;
          default:
            child = mutate_weights(std::move(child), rng, 0.5, 2.0);
        }
        ASSERT_NO_THROW(validate(child));
        ASSERT_FALSE(oracle::has_cycle(child));
        g = std::move(child);
      }
    }
  }
}

TEST(GenomeFile, RoundTripIsIdentity) {
  Rng rng(27);
  for (int i = 0; i < 50; ++i) {
    Genome g = oracle::random_genome(rng);
    g.fitness = rng.uniform();
    const std::string text = to_json(g);
    const Genome back = genome_from_json(text);
    EXPECT_TRUE(back.same_structure(g));
    EXPECT_EQ(back.fitness, g.fitness);
    EXPECT_EQ(to_json(back), text);
  }
}

TEST(GenomeFile, KeyOrderIsStable) {
  const std::string text = to_json(fixture::hub_genome());
  EXPECT_LT(text.find("\"nodes\""), text.find("\"connections\""));
  EXPECT_LT(text.find("\"connections\""), text.find("\"fitness\""));
  EXPECT_LT(text.find("\"innovation\""), text.find("\"source\""));
  EXPECT_NE(text.find("\"activation\": \"sigmoid\""), std::string::npos);
}

TEST(GenomeFile, RejectsMalformedInput) {
  EXPECT_THROW(genome_from_json("{"), DataError);
  EXPECT_THROW(genome_from_json(R"({"nodes": [], "connections": [], "fitness": 0})"), DataError);
  std::string text = to_json(fixture::hub_genome());
  text.replace(text.find("sigmoid"), 7, "tanh");
  EXPECT_THROW(genome_from_json(text), DataError);
}

TEST(GenomeDeterminism, SameSeedSameBytes) {
  auto build = [](std::uint64_t seed) {
    Rng rng(seed);
    auto reg = InnovationRegistry::for_interface(2, 2);
    Genome g = minimal_genome(2, 2, rng);
    for (int i = 0; i < 30; ++i) {
      g = mutate_add_node(std::move(g), reg, rng, hidden_catalog());
      g = mutate_add_connection(std::move(g), reg, rng);
      g = mutate_activation(std::move(g), reg, rng, hidden_catalog());
      g = mutate_weights(std::move(g), rng, 0.2, 2.0);
    }
    return to_json(g);
  };
  EXPECT_EQ(build(99), build(99));
  EXPECT_NE(build(99), build(100));
}

}  // namespace
}  // namespace haneat
