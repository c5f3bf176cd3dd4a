#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "galb/errors.hpp"

namespace galb {

using NodeId = int;
using Load = std::int64_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct OutEdge {
  NodeId to = 0;
  int edge_index = 0;  // position in canonical edge order

  friend bool operator==(const OutEdge&, const OutEdge&) = default;
};

// Directed graph over nodes 0..node_count-1 with a fixed canonical edge
// order: lexicographic by (src, dst). Gene i of a chromosome always refers
// to edges()[i]. No self-loops, no duplicate directed edges; (i,j) and
// (j,i) are distinct links.
class NetworkGraph {
 public:
  NetworkGraph(int node_count, std::vector<Edge> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const OutEdge> out_edges(NodeId node) const {
    return {out_[static_cast<std::size_t>(node)].data(),
            out_[static_cast<std::size_t>(node)].size()};
  }

  // Canonical index of (src, dst), or -1 when the edge is absent.
  int edge_index(NodeId src, NodeId dst) const;
  bool has_edge(NodeId src, NodeId dst) const { return edge_index(src, dst) >= 0; }

  friend bool operator==(const NetworkGraph& a, const NetworkGraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;                // canonical order
  std::vector<std::vector<OutEdge>> out_;  // per source, sorted by dst
};

// One integer weight per edge in canonical order, each in [1, weight_max].
struct WeightVector {
  std::vector<int> weights;
  int weight_max = 1;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// Throws WeightError unless weights has one entry per graph edge, every
// entry in [1, weight_max].
void validate_weights(const NetworkGraph& graph, const WeightVector& weights);

// N x N matrix with entry (i,j) = w_ij where edge (i,j) exists, 0 elsewhere.
class WeightedAdjacency {
 public:
  explicit WeightedAdjacency(int node_count)
      : node_count_(node_count),
        values_(static_cast<std::size_t>(node_count) * node_count, 0) {}

  int node_count() const { return node_count_; }
  int at(NodeId i, NodeId j) const {
    return values_[static_cast<std::size_t>(i) * node_count_ + j];
  }
  void set(NodeId i, NodeId j, int value) {
    values_[static_cast<std::size_t>(i) * node_count_ + j] = value;
  }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const WeightedAdjacency&, const WeightedAdjacency&) = default;

 private:
  int node_count_ = 0;
  std::vector<int> values_;  // row-major
};

// Element-wise composition of adjacency and weights.
WeightedAdjacency hadamard(const NetworkGraph& graph, const WeightVector& weights);

struct Demand {
  NodeId src = 0;
  NodeId dst = 0;
  Load units = 1;  // multiplier m; effective demand is m * granularity

  friend bool operator==(const Demand&, const Demand&) = default;
};

// Point-to-point demands, at most one per ordered (src, dst) pair.
// granularity is the homogeneous flow quantum f; effective units of a
// demand are units * granularity (f defaults to 1).
class FlowSet {
 public:
  explicit FlowSet(Load granularity = 1);

  void add(NodeId src, NodeId dst, Load units = 1);

  const std::vector<Demand>& demands() const { return demands_; }
  Load granularity() const { return granularity_; }
  int size() const { return static_cast<int>(demands_.size()); }
  bool empty() const { return demands_.empty(); }

  friend bool operator==(const FlowSet&, const FlowSet&) = default;

 private:
  Load granularity_ = 1;
  std::vector<Demand> demands_;
};

// Per-edge accumulated flow units for one evaluation. Entry (i,j) is zero
// wherever no edge exists. Bound to the graph it was created from; keep the
// graph alive for the matrix lifetime and confine each instance to a single
// evaluation.
class LoadMatrix {
 public:
  explicit LoadMatrix(const NetworkGraph& graph);

  const NetworkGraph& graph() const { return *graph_; }

  Load at(NodeId i, NodeId j) const;
  Load max() const;
  Load total() const;

  // Loads indexed by canonical edge order.
  const std::vector<Load>& per_edge() const { return loads_; }
  // Row-major N*N load vector VL.
  std::vector<Load> flatten() const;

  void add_edge(int edge_index, Load units);

  friend bool operator==(const LoadMatrix& a, const LoadMatrix& b) {
    return a.loads_ == b.loads_;
  }

 private:
  const NetworkGraph* graph_;
  std::vector<Load> loads_;  // by canonical edge index
};

// Adds `units` to every edge of `path`; other entries unchanged. Throws
// GraphError naming the pair if a path edge is absent from the graph.
void accumulate_load(LoadMatrix& loads, std::span<const Edge> path, Load units);

}  // namespace galb
