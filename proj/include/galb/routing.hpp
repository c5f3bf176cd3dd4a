#pragma once

#include <cstdint>
#include <vector>

#include "galb/network.hpp"

namespace galb {

// One routed flow: the demand plus the edge sequence selected for it.
struct Path {
  Demand flow;
  std::vector<Edge> edge_sequence;
  std::int64_t total_weight = 0;

  friend bool operator==(const Path&, const Path&) = default;
};

struct RoutingTable {
  std::vector<Path> rows;  // one per demand, in FlowSet order

  friend bool operator==(const RoutingTable&, const RoutingTable&) = default;
};

struct FitnessResult {
  Load max_load = 0;
  LoadMatrix load_matrix;
  RoutingTable routing_table;

  friend bool operator==(const FitnessResult&, const FitnessResult&) = default;
};

// Minimum-total-weight directed path from source to dest. Tie-break is
// deterministic: nodes settle in increasing index order among equal
// tentative distances and a predecessor is replaced only on strict
// improvement. Throws UnreachableError when no directed path exists.
Path shortest_path(const NetworkGraph& graph, const WeightVector& weights,
                   NodeId source, NodeId dest);

// Routes every demand independently under one weight vector, accumulates
// per-edge loads, and reports the maximum. Pure function of its arguments.
FitnessResult evaluate_fitness(const NetworkGraph& graph, const WeightVector& weights,
                               const FlowSet& flows);

// Row-major N*N view of the result's load matrix (the load vector VL).
std::vector<Load> flatten_loads(const FitnessResult& result);

// Reusable evaluation workspace for optimizer loops. Flows are grouped by
// source so one shortest-path tree serves every demand leaving that node;
// scratch buffers persist across calls. Not thread-safe; use one instance
// per worker.
class FitnessEvaluator {
 public:
  FitnessEvaluator(const NetworkGraph& graph, const FlowSet& flows);

  // max(l_ij) only; no routing table is materialized.
  Load max_load(const WeightVector& weights);

  // Full result with routing table and load matrix.
  FitnessResult evaluate(const WeightVector& weights);

  const NetworkGraph& graph() const { return *graph_; }
  const FlowSet& flows() const { return *flows_; }

 private:
  struct SourceGroup {
    NodeId source;
    std::vector<int> demand_indices;  // into flows().demands()
  };

  // Fills dist_/pred_edge_ for `source`; relaxations use weights[edge].
  void build_tree(NodeId source, const std::vector<int>& weights);
  void route_loads(const WeightVector& weights);

  const NetworkGraph* graph_;
  const FlowSet* flows_;
  std::vector<SourceGroup> groups_;  // ascending source id
  std::vector<std::int64_t> dist_;
  std::vector<int> pred_edge_;  // canonical edge index, -1 = none
  std::vector<Load> loads_;     // by canonical edge index
};

}  // namespace galb
