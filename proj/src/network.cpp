#include "galb/network.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace galb {

namespace {

std::string pair_str(NodeId src, NodeId dst) {
  return "(" + std::to_string(src) + ", " + std::to_string(dst) + ")";
}

}  // namespace

NetworkGraph::NetworkGraph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ <= 0) {
    throw GraphError("node count must be positive, got " + std::to_string(node_count_));
  }
  for (const Edge& e : edges_) {
    if (e.src < 0 || e.src >= node_count_ || e.dst < 0 || e.dst >= node_count_) {
      throw GraphError("edge endpoint out of range [0, " + std::to_string(node_count_) +
                       "): " + pair_str(e.src, e.dst));
    }
    if (e.src == e.dst) {
      throw GraphError("self-loop not allowed: " + pair_str(e.src, e.dst));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) {
      throw GraphError("duplicate directed edge: " + pair_str(edges_[i].src, edges_[i].dst));
    }
  }
  out_.resize(static_cast<std::size_t>(node_count_));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_[static_cast<std::size_t>(edges_[i].src)].push_back(
        OutEdge{edges_[i].dst, static_cast<int>(i)});
  }
  // Canonical sort already orders each out-list by dst.
}

int NetworkGraph::edge_index(NodeId src, NodeId dst) const {
  if (src < 0 || src >= node_count_) {
    return -1;
  }
  const auto& row = out_[static_cast<std::size_t>(src)];
  auto it = std::lower_bound(row.begin(), row.end(), dst,
                             [](const OutEdge& e, NodeId d) { return e.to < d; });
  if (it == row.end() || it->to != dst) {
    return -1;
  }
  return it->edge_index;
}

void validate_weights(const NetworkGraph& graph, const WeightVector& weights) {
  if (static_cast<int>(weights.weights.size()) != graph.edge_count()) {
    throw WeightError("weight vector length " + std::to_string(weights.weights.size()) +
                      " does not match edge count " + std::to_string(graph.edge_count()));
  }
  if (weights.weight_max < 1) {
    throw WeightError("weight_max must be >= 1, got " + std::to_string(weights.weight_max));
  }
  for (std::size_t i = 0; i < weights.weights.size(); ++i) {
    const int w = weights.weights[i];
    if (w < 1 || w > weights.weight_max) {
      throw WeightError("weight " + std::to_string(w) + " at gene " + std::to_string(i) +
                        " outside [1, " + std::to_string(weights.weight_max) + "]");
    }
  }
}

WeightedAdjacency hadamard(const NetworkGraph& graph, const WeightVector& weights) {
  validate_weights(graph, weights);
  WeightedAdjacency result(graph.node_count());
  const auto& edges = graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    result.set(edges[i].src, edges[i].dst, weights.weights[i]);
  }
  return result;
}

FlowSet::FlowSet(Load granularity) : granularity_(granularity) {
  if (granularity_ < 1) {
    throw FlowError("flow granularity must be >= 1, got " + std::to_string(granularity_));
  }
}

void FlowSet::add(NodeId src, NodeId dst, Load units) {
  if (src == dst) {
    throw FlowError("demand endpoints must differ: " + pair_str(src, dst));
  }
  if (src < 0 || dst < 0) {
    throw FlowError("demand endpoint negative: " + pair_str(src, dst));
  }
  if (units < 1) {
    throw FlowError("demand units must be positive for " + pair_str(src, dst) + ", got " +
                    std::to_string(units));
  }
  for (const Demand& d : demands_) {
    if (d.src == src && d.dst == dst) {
      throw FlowError("duplicate demand for pair " + pair_str(src, dst));
    }
  }
  demands_.push_back(Demand{src, dst, units});
}

LoadMatrix::LoadMatrix(const NetworkGraph& graph)
    : graph_(&graph), loads_(static_cast<std::size_t>(graph.edge_count()), 0) {}

Load LoadMatrix::at(NodeId i, NodeId j) const {
  const int idx = graph_->edge_index(i, j);
  return idx < 0 ? 0 : loads_[static_cast<std::size_t>(idx)];
}

Load LoadMatrix::max() const {
  Load m = 0;
  for (Load l : loads_) {
    m = std::max(m, l);
  }
  return m;
}

Load LoadMatrix::total() const {
  Load t = 0;
  for (Load l : loads_) {
    t += l;
  }
  return t;
}

std::vector<Load> LoadMatrix::flatten() const {
  const int n = graph_->node_count();
  std::vector<Load> flat(static_cast<std::size_t>(n) * n, 0);
  const auto& edges = graph_->edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    flat[static_cast<std::size_t>(edges[i].src) * n + edges[i].dst] = loads_[i];
  }
  return flat;
}

void LoadMatrix::add_edge(int edge_index, Load units) {
  loads_[static_cast<std::size_t>(edge_index)] += units;
}

void accumulate_load(LoadMatrix& loads, std::span<const Edge> path, Load units) {
  const NetworkGraph& graph = loads.graph();
  for (const Edge& e : path) {
    const int idx = graph.edge_index(e.src, e.dst);
    if (idx < 0) {
      throw GraphError("path edge not in graph: " + pair_str(e.src, e.dst));
    }
    loads.add_edge(idx, units);
  }
}

}  // namespace galb
