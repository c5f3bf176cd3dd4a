#include "galb/routing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

namespace galb {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Shortest-path tree rooted at source. Nodes settle in (distance, index)
// order; predecessors are replaced on strict improvement only. Stops once
// stop_at is settled (pass -1 for the full tree).
void dijkstra_tree(const NetworkGraph& graph, const std::vector<int>& weights,
                   NodeId source, NodeId stop_at, std::vector<std::int64_t>& dist,
                   std::vector<int>& pred_edge) {
  const auto n = static_cast<std::size_t>(graph.node_count());
  dist.assign(n, kInf);
  pred_edge.assign(n, -1);
  dist[static_cast<std::size_t>(source)] = 0;

  using Entry = std::pair<std::int64_t, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(u)]) {
      continue;  // stale entry
    }
    if (u == stop_at) {
      return;
    }
    for (const OutEdge& oe : graph.out_edges(u)) {
      const std::int64_t candidate = d + weights[static_cast<std::size_t>(oe.edge_index)];
      if (candidate < dist[static_cast<std::size_t>(oe.to)]) {
        dist[static_cast<std::size_t>(oe.to)] = candidate;
        pred_edge[static_cast<std::size_t>(oe.to)] = oe.edge_index;
        heap.emplace(candidate, oe.to);
      }
    }
  }
}

// Rebuilds the edge sequence for `flow` from a predecessor tree.
Path path_from_tree(const NetworkGraph& graph, const std::vector<std::int64_t>& dist,
                    const std::vector<int>& pred_edge, const Demand& flow) {
  Path path;
  path.flow = flow;
  path.total_weight = dist[static_cast<std::size_t>(flow.dst)];
  NodeId cur = flow.dst;
  while (cur != flow.src) {
    const int ei = pred_edge[static_cast<std::size_t>(cur)];
    const Edge& e = graph.edges()[static_cast<std::size_t>(ei)];
    path.edge_sequence.push_back(e);
    cur = e.src;
  }
  std::reverse(path.edge_sequence.begin(), path.edge_sequence.end());
  return path;
}

void check_query_node(const NetworkGraph& graph, NodeId node) {
  if (node < 0 || node >= graph.node_count()) {
    throw FlowError("query node " + std::to_string(node) + " out of range [0, " +
                    std::to_string(graph.node_count()) + ")");
  }
}

}  // namespace

Path shortest_path(const NetworkGraph& graph, const WeightVector& weights, NodeId source,
                   NodeId dest) {
  check_query_node(graph, source);
  check_query_node(graph, dest);
  if (source == dest) {
    throw FlowError("shortest path query requires distinct endpoints, got node " +
                    std::to_string(source) + " twice");
  }
  validate_weights(graph, weights);

  std::vector<std::int64_t> dist;
  std::vector<int> pred_edge;
  dijkstra_tree(graph, weights.weights, source, dest, dist, pred_edge);
  if (dist[static_cast<std::size_t>(dest)] >= kInf) {
    throw UnreachableError(source, dest);
  }
  return path_from_tree(graph, dist, pred_edge, Demand{source, dest, 1});
}

FitnessEvaluator::FitnessEvaluator(const NetworkGraph& graph, const FlowSet& flows)
    : graph_(&graph), flows_(&flows) {
  const auto& demands = flows.demands();
  std::vector<std::vector<int>> by_source(static_cast<std::size_t>(graph.node_count()));
  for (std::size_t i = 0; i < demands.size(); ++i) {
    check_query_node(graph, demands[i].src);
    check_query_node(graph, demands[i].dst);
    by_source[static_cast<std::size_t>(demands[i].src)].push_back(static_cast<int>(i));
  }
  for (NodeId s = 0; s < graph.node_count(); ++s) {
    if (!by_source[static_cast<std::size_t>(s)].empty()) {
      groups_.push_back(SourceGroup{s, std::move(by_source[static_cast<std::size_t>(s)])});
    }
  }
}

void FitnessEvaluator::build_tree(NodeId source, const std::vector<int>& weights) {
  dijkstra_tree(*graph_, weights, source, -1, dist_, pred_edge_);
}

Load FitnessEvaluator::max_load(const WeightVector& weights) {
  validate_weights(*graph_, weights);
  route_loads(weights);
  Load m = 0;
  for (Load l : loads_) {
    m = std::max(m, l);
  }
  return m;
}

void FitnessEvaluator::route_loads(const WeightVector& weights) {
  loads_.assign(static_cast<std::size_t>(graph_->edge_count()), 0);
  const auto& demands = flows_->demands();
  const Load granularity = flows_->granularity();
  for (const SourceGroup& group : groups_) {
    build_tree(group.source, weights.weights);
    for (int di : group.demand_indices) {
      const Demand& dm = demands[static_cast<std::size_t>(di)];
      if (dist_[static_cast<std::size_t>(dm.dst)] >= kInf) {
        throw UnreachableError(dm.src, dm.dst);
      }
      const Load units = dm.units * granularity;
      NodeId cur = dm.dst;
      while (cur != dm.src) {
        const int ei = pred_edge_[static_cast<std::size_t>(cur)];
        loads_[static_cast<std::size_t>(ei)] += units;
        cur = graph_->edges()[static_cast<std::size_t>(ei)].src;
      }
    }
  }
}

FitnessResult FitnessEvaluator::evaluate(const WeightVector& weights) {
  validate_weights(*graph_, weights);
  FitnessResult result{0, LoadMatrix(*graph_), RoutingTable{}};
  const auto& demands = flows_->demands();
  const Load granularity = flows_->granularity();
  result.routing_table.rows.resize(demands.size());
  for (const SourceGroup& group : groups_) {
    build_tree(group.source, weights.weights);
    for (int di : group.demand_indices) {
      const Demand& dm = demands[static_cast<std::size_t>(di)];
      if (dist_[static_cast<std::size_t>(dm.dst)] >= kInf) {
        throw UnreachableError(dm.src, dm.dst);
      }
      const Load units = dm.units * granularity;
      NodeId cur = dm.dst;
      while (cur != dm.src) {
        const int ei = pred_edge_[static_cast<std::size_t>(cur)];
        result.load_matrix.add_edge(ei, units);
        cur = graph_->edges()[static_cast<std::size_t>(ei)].src;
      }
      result.routing_table.rows[static_cast<std::size_t>(di)] =
          path_from_tree(*graph_, dist_, pred_edge_, dm);
    }
  }
  result.max_load = result.load_matrix.max();
  return result;
}

FitnessResult evaluate_fitness(const NetworkGraph& graph, const WeightVector& weights,
                               const FlowSet& flows) {
  FitnessEvaluator evaluator(graph, flows);
  return evaluator.evaluate(weights);
}

std::vector<Load> flatten_loads(const FitnessResult& result) {
  return result.load_matrix.flatten();
}

}  // namespace galb
