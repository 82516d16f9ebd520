#pragma once

#include <vector>

#include "haneat/genome.hpp"

namespace haneat::fixture {

/// Two inputs, bias, one output (ids 0..3) plus hidden nodes 10 (sigmoid)
/// and 11 (relu). Node 10 has three incoming (0, 1, 2) and two outgoing
/// (3, 11) connections; connection 0 -> 3 is disabled.
///
///   innov  edge       weight  enabled
///   0      0 -> 3      0.5    no
///   1      1 -> 3     -0.25   yes
///   2      2 -> 3      0.75   yes
///   5      0 -> 10     1.0    yes
///   6      1 -> 10    -1.5    yes
///   7      2 -> 10     0.3    yes
///   8      10 -> 3     2.0    yes
///   9      10 -> 11    0.8    yes
///   10     2 -> 11    -0.6    yes
///   11     11 -> 3     1.25   yes
inline Genome hub_genome() {
  Genome g;
  g.nodes = {{0, NodeRole::input, ActivationKind::linear},   {1, NodeRole::input, ActivationKind::linear},
             {2, NodeRole::bias, ActivationKind::linear},    {3, NodeRole::output, ActivationKind::linear},
             {10, NodeRole::hidden, ActivationKind::sigmoid}, {11, NodeRole::hidden, ActivationKind::relu}};
  g.connections = {{0, 0, 3, 0.5, false},  {1, 1, 3, -0.25, true}, {2, 2, 3, 0.75, true},  {5, 0, 10, 1.0, true},
                   {6, 1, 10, -1.5, true}, {7, 2, 10, 0.3, true},  {8, 10, 3, 2.0, true},  {9, 10, 11, 0.8, true},
                   {10, 2, 11, -0.6, true}, {11, 11, 3, 1.25, true}};
  return g;
}

/// A 26-gene genome (so compatibility is normalized by gene count): three
/// inputs, bias, two outputs, and a chain of hidden nodes 20..25 where node 22
/// has exactly two incoming and two outgoing connections.
inline Genome wide_genome() {
  Genome g;
  for (NodeId i = 0; i < 3; ++i) g.nodes.push_back({i, NodeRole::input, ActivationKind::linear});
  g.nodes.push_back({3, NodeRole::bias, ActivationKind::linear});
  g.nodes.push_back({4, NodeRole::output, ActivationKind::linear});
  g.nodes.push_back({5, NodeRole::output, ActivationKind::linear});
  const ActivationKind kinds[] = {ActivationKind::step, ActivationKind::relu, ActivationKind::gaussian,
                                  ActivationKind::sigmoid, ActivationKind::gaussian, ActivationKind::step};
  for (NodeId h = 0; h < 6; ++h) g.nodes.push_back({20 + h, NodeRole::hidden, kinds[h]});
  Innovation inn = 0;
  double w = 0.1;
  auto add = [&](NodeId s, NodeId t) {
    g.connections.push_back({inn++, s, t, w, true});
    w += 0.13;
  };
  for (NodeId i = 0; i <= 3; ++i) add(i, 4);
  for (NodeId i = 0; i <= 3; ++i) add(i, 5);
  for (NodeId i = 0; i <= 3; ++i) add(i, 20);
  add(20, 21);
  add(3, 21);
  add(21, 22);  // into 22
  add(0, 22);  // into 22
  add(22, 23);  // out of 22
  add(22, 4);  // out of 22
  add(23, 5);
  add(1, 23);
  add(21, 24);
  add(24, 25);
  add(25, 5);
  add(2, 24);
  add(20, 4);
  add(23, 4);
  return g;
}

}  // namespace haneat::fixture
