#pragma once

#include "galb/network.hpp"

namespace galb::test {

// 4-node, 5-edge network used as the exhaustive-search regression fixture.
// Canonical edge order: (0,1) (0,2) (1,2) (2,3) (3,0).
inline NetworkGraph fixture_graph_n4e5() {
  return NetworkGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

// Five unit demands on the fixture graph.
inline FlowSet fixture_flows_n4e5() {
  FlowSet flows;
  flows.add(0, 3);
  flows.add(1, 0);
  flows.add(2, 1);
  flows.add(3, 2);
  flows.add(0, 2);
  return flows;
}

// Directed chain 0 -> 1 -> 2 -> ... -> (length-1).
inline NetworkGraph chain_graph(int length) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < length; ++i) {
    edges.push_back(Edge{i, i + 1});
  }
  return NetworkGraph(length, std::move(edges));
}

inline WeightVector unit_weights(const NetworkGraph& graph, int weight_max = 1) {
  return WeightVector{std::vector<int>(static_cast<std::size_t>(graph.edge_count()), 1),
                      weight_max};
}

}  // namespace galb::test
