#include "galb/workbench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "galb/rng.hpp"

namespace galb {

using nlohmann::json;

int TopologyProfile::cn() const {
  const double denom = static_cast<double>(node_count) * (node_count - 1);
  return static_cast<int>(std::llround(100.0 * edge_count / denom));
}

void validate(const TopologyProfile& profile) {
  if (profile.node_count < 2) {
    throw ConfigError("profile " + profile.name + ": node count must be >= 2, got " +
                      std::to_string(profile.node_count));
  }
  const long long max_edges =
      static_cast<long long>(profile.node_count) * (profile.node_count - 1);
  if (profile.edge_count < profile.node_count || profile.edge_count > max_edges) {
    throw ConfigError("profile " + profile.name + ": edge count " +
                      std::to_string(profile.edge_count) + " outside [" +
                      std::to_string(profile.node_count) + ", " + std::to_string(max_edges) +
                      "]");
  }
  if (profile.weight_max < 1) {
    throw ConfigError("profile " + profile.name + ": weight_max must be >= 1");
  }
  if (profile.flow_count < 0 || profile.flow_count > max_edges) {
    throw ConfigError("profile " + profile.name + ": flow count " +
                      std::to_string(profile.flow_count) + " outside [0, " +
                      std::to_string(max_edges) + "]");
  }
}

const std::vector<TopologyProfile>& builtin_profiles() {
  static const std::vector<TopologyProfile> profiles = {
      {"n4e5", 4, 5, 5, 5, 31},       {"n5e11", 5, 11, 5, 10, 44},
      {"n6e15", 6, 15, 5, 15, 42},    {"n10e39", 10, 39, 9, 20, 39},
      {"n25e219", 25, 219, 9, 45, 35}, {"n50e872", 50, 872, 9, 100, 35},
  };
  return profiles;
}

std::optional<TopologyProfile> find_profile(const std::string& name) {
  for (const TopologyProfile& p : builtin_profiles()) {
    if (p.name == name) {
      return p;
    }
  }
  return std::nullopt;
}

NetworkGraph generate_topology(const TopologyProfile& profile, std::uint64_t rng_seed) {
  validate(profile);
  Rng rng(rng_seed);
  const int n = profile.node_count;

  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(profile.edge_count));
  for (int i = 0; i < n; ++i) {
    edges.push_back(Edge{order[static_cast<std::size_t>(i)],
                         order[static_cast<std::size_t>((i + 1) % n)]});
  }

  // Remaining edges drawn uniformly from the ordered pairs not on the cycle.
  std::vector<Edge> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * (n - 1) - n);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId d = 0; d < n; ++d) {
      if (s == d) {
        continue;
      }
      const Edge e{s, d};
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
        candidates.push_back(e);
      }
    }
  }
  shuffle(candidates, rng);
  const int extra = profile.edge_count - n;
  edges.insert(edges.end(), candidates.begin(), candidates.begin() + extra);

  return NetworkGraph(n, std::move(edges));
}

FlowSet generate_flows(const NetworkGraph& graph, int flow_count, std::uint64_t rng_seed) {
  const int n = graph.node_count();
  const long long max_flows = static_cast<long long>(n) * (n - 1);
  if (flow_count < 0 || flow_count > max_flows) {
    throw FlowError("flow count " + std::to_string(flow_count) + " outside [0, " +
                    std::to_string(max_flows) + "] for " + std::to_string(n) + " nodes");
  }
  Rng rng(rng_seed);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(static_cast<std::size_t>(max_flows));
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId d = 0; d < n; ++d) {
      if (s != d) {
        pairs.emplace_back(s, d);
      }
    }
  }
  shuffle(pairs, rng);
  FlowSet flows;
  for (int i = 0; i < flow_count; ++i) {
    flows.add(pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second, 1);
  }
  return flows;
}

FlowSet generate_flow_units(const NetworkGraph& graph, int unit_count, std::uint64_t rng_seed) {
  const int n = graph.node_count();
  if (unit_count < 0) {
    throw FlowError("unit count must be non-negative, got " + std::to_string(unit_count));
  }
  Rng rng(rng_seed);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId d = 0; d < n; ++d) {
      if (s != d) {
        pairs.emplace_back(s, d);
      }
    }
  }
  if (pairs.empty() && unit_count > 0) {
    throw FlowError("cannot place flows on a single-node graph");
  }
  std::vector<Load> units(pairs.size(), 0);
  // Deal whole shuffled decks; pair multiplicities stay within one unit of
  // each other for any requested count.
  std::vector<std::size_t> deck(pairs.size());
  std::iota(deck.begin(), deck.end(), 0);
  int remaining = unit_count;
  while (remaining > 0) {
    shuffle(deck, rng);
    const int take = std::min<int>(remaining, static_cast<int>(deck.size()));
    for (int i = 0; i < take; ++i) {
      units[deck[static_cast<std::size_t>(i)]] += 1;
    }
    remaining -= take;
  }
  FlowSet flows;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (units[i] > 0) {
      flows.add(pairs[i].first, pairs[i].second, units[i]);
    }
  }
  return flows;
}

double connectivity(const NetworkGraph& graph) {
  const int n = graph.node_count();
  if (n < 2) {
    return 0.0;
  }
  return 100.0 * graph.edge_count() / (static_cast<double>(n) * (n - 1));
}

namespace {

// Nodes reachable from `start`, following out-edges (forward) or in-edges
// (backward via the transposed adjacency).
int count_reachable(const NetworkGraph& graph, NodeId start, bool forward) {
  const auto n = static_cast<std::size_t>(graph.node_count());
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : graph.edges()) {
    if (forward) {
      adj[static_cast<std::size_t>(e.src)].push_back(e.dst);
    } else {
      adj[static_cast<std::size_t>(e.dst)].push_back(e.src);
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int count = 0;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    ++count;
    for (NodeId v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const NetworkGraph& graph) {
  const int n = graph.node_count();
  if (n <= 1) {
    return true;
  }
  return count_reachable(graph, 0, true) == n && count_reachable(graph, 0, false) == n;
}

namespace {

json load_document(const std::filesystem::path& path, const char* kind) {
  std::ifstream in(path);
  if (!in) {
    throw DocumentError(std::string(kind) + " document not readable: " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed ") + kind + " document " + path.string() +
                        ": " + e.what());
  }
}

void store_document(const json& doc, const std::filesystem::path& path, const char* kind) {
  std::ofstream out(path);
  if (!out) {
    throw DocumentError(std::string(kind) + " document not writable: " + path.string());
  }
  out << doc.dump(2) << "\n";
}

void reject_unknown_fields(const json& object, std::initializer_list<const char*> allowed,
                           const char* kind) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (item.key() == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw DocumentError(std::string("unknown field \"") + item.key() + "\" in " + kind +
                          " document");
    }
  }
}

int require_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) {
    throw DocumentError(what + " must be an integer");
  }
  return value.get<int>();
}

}  // namespace

NetworkGraph read_topology(const std::filesystem::path& path) {
  const json doc = load_document(path, "topology");
  if (!doc.is_object()) {
    throw DocumentError("topology document must be an object: " + path.string());
  }
  reject_unknown_fields(doc, {"nodes", "edges"}, "topology");
  if (!doc.contains("nodes") || !doc.contains("edges")) {
    throw DocumentError("topology document requires fields \"nodes\" and \"edges\"");
  }
  const int nodes = require_int(doc["nodes"], "\"nodes\"");
  if (!doc["edges"].is_array()) {
    throw DocumentError("\"edges\" must be an array of [src, dst] pairs");
  }
  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 2) {
      throw DocumentError("edge entry must be a two-element array, got " + item.dump());
    }
    edges.push_back(Edge{require_int(item[0], "edge source"), require_int(item[1], "edge destination")});
  }
  return NetworkGraph(nodes, std::move(edges));
}

void write_topology(const NetworkGraph& graph, const std::filesystem::path& path) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back(json::array({e.src, e.dst}));
  }
  store_document(json{{"nodes", graph.node_count()}, {"edges", std::move(edges)}}, path,
                 "topology");
}

FlowSet read_flows(const std::filesystem::path& path, const NetworkGraph& graph) {
  const json doc = load_document(path, "flows");
  if (!doc.is_array()) {
    throw DocumentError("flows document must be an array: " + path.string());
  }
  FlowSet flows;
  for (const auto& item : doc) {
    if (!item.is_object()) {
      throw DocumentError("flow entry must be an object, got " + item.dump());
    }
    reject_unknown_fields(item, {"src", "dst", "units"}, "flows");
    for (const char* field : {"src", "dst", "units"}) {
      if (!item.contains(field)) {
        throw DocumentError("flow entry missing field \"" + std::string(field) +
                            "\": " + item.dump());
      }
    }
    const int src = require_int(item["src"], "flow src");
    const int dst = require_int(item["dst"], "flow dst");
    const int units = require_int(item["units"], "flow units");
    for (const int node : {src, dst}) {
      if (node < 0 || node >= graph.node_count()) {
        throw DocumentError("flow (" + std::to_string(src) + ", " + std::to_string(dst) +
                            "): node " + std::to_string(node) + " out of range [0, " +
                            std::to_string(graph.node_count()) + ")");
      }
    }
    flows.add(src, dst, units);
  }
  return flows;
}

void write_flows(const FlowSet& flows, const std::filesystem::path& path) {
  json doc = json::array();
  for (const Demand& d : flows.demands()) {
    doc.push_back(json{{"src", d.src}, {"dst", d.dst}, {"units", d.units}});
  }
  store_document(doc, path, "flows");
}

WeightVector read_weights(const std::filesystem::path& path, const NetworkGraph& graph,
                          std::optional<int> weight_max) {
  const json doc = load_document(path, "weights");
  if (!doc.is_array()) {
    throw DocumentError("weights document must be an array: " + path.string());
  }
  std::vector<int> weights(static_cast<std::size_t>(graph.edge_count()), 0);
  std::vector<char> covered(static_cast<std::size_t>(graph.edge_count()), 0);
  for (const auto& item : doc) {
    if (!item.is_object()) {
      throw DocumentError("weight entry must be an object, got " + item.dump());
    }
    reject_unknown_fields(item, {"src", "dst", "weight"}, "weights");
    for (const char* field : {"src", "dst", "weight"}) {
      if (!item.contains(field)) {
        throw DocumentError("weight entry missing field \"" + std::string(field) +
                            "\": " + item.dump());
      }
    }
    const int src = require_int(item["src"], "weight src");
    const int dst = require_int(item["dst"], "weight dst");
    const int weight = require_int(item["weight"], "weight value");
    const int idx = graph.edge_index(src, dst);
    if (idx < 0) {
      throw DocumentError("weights document names edge (" + std::to_string(src) + ", " +
                          std::to_string(dst) + ") absent from the graph");
    }
    if (covered[static_cast<std::size_t>(idx)]) {
      throw DocumentError("weights document repeats edge (" + std::to_string(src) + ", " +
                          std::to_string(dst) + ")");
    }
    covered[static_cast<std::size_t>(idx)] = 1;
    weights[static_cast<std::size_t>(idx)] = weight;
  }
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (!covered[i]) {
      const Edge& e = graph.edges()[i];
      throw DocumentError("weights document misses edge (" + std::to_string(e.src) + ", " +
                          std::to_string(e.dst) + ")");
    }
  }
  WeightVector result;
  result.weights = std::move(weights);
  result.weight_max =
      weight_max.value_or(result.weights.empty()
                              ? 1
                              : *std::max_element(result.weights.begin(), result.weights.end()));
  validate_weights(graph, result);
  return result;
}

void write_weights(const WeightVector& weights, const NetworkGraph& graph,
                   const std::filesystem::path& path) {
  validate_weights(graph, weights);
  json doc = json::array();
  const auto& edges = graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    doc.push_back(
        json{{"src", edges[i].src}, {"dst", edges[i].dst}, {"weight", weights.weights[i]}});
  }
  store_document(doc, path, "weights");
}

}  // namespace galb
