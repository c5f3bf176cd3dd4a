#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "galb/network.hpp"

namespace galb {

// A named class of generated networks: size, weight range, and default
// demand count. cn() is the percentage of present directed edges relative
// to the complete digraph on the same nodes.
struct TopologyProfile {
  std::string name;
  int node_count = 0;
  int edge_count = 0;
  int weight_max = 9;
  int flow_count = 0;
  // Connectivity figure the profile was originally quoted with, where it
  // differs from cn(); kept for reference in reports.
  std::optional<int> reference_cn;

  int cn() const;
};

// Throws ConfigError unless node_count >= 2 and
// node_count <= edge_count <= node_count * (node_count - 1).
void validate(const TopologyProfile& profile);

// The benchmark harness profiles, n4e5 through n50e872.
const std::vector<TopologyProfile>& builtin_profiles();
std::optional<TopologyProfile> find_profile(const std::string& name);

// Strongly connected random digraph with exactly profile.edge_count edges:
// a covering cycle through a random node permutation plus uniformly drawn
// extra edges, no duplicates. Deterministic per seed.
NetworkGraph generate_topology(const TopologyProfile& profile, std::uint64_t rng_seed);

// flow_count distinct ordered pairs, drawn uniformly without replacement,
// one unit each. Deterministic per seed. Rejects counts above the
// |N|*(|N|-1) distinct pairs.
FlowSet generate_flows(const NetworkGraph& graph, int flow_count, std::uint64_t rng_seed);

// unit_count unit flows dealt over shuffled decks of the ordered pairs;
// counts beyond |N|*(|N|-1) wrap into multiplicities, so the demand set
// keeps one entry per pair while its units sum to unit_count. Demands are
// listed in pair order. Deterministic per seed.
FlowSet generate_flow_units(const NetworkGraph& graph, int unit_count, std::uint64_t rng_seed);

// 100 * |E| / (|N| * (|N|-1)).
double connectivity(const NetworkGraph& graph);

// Every ordered node pair routable.
bool is_strongly_connected(const NetworkGraph& graph);

// JSON documents (schemas in the README). Readers reject malformed
// documents, unknown fields, and invariant violations, naming the
// offending element; reading back a written document reproduces the value.
NetworkGraph read_topology(const std::filesystem::path& path);
void write_topology(const NetworkGraph& graph, const std::filesystem::path& path);

FlowSet read_flows(const std::filesystem::path& path, const NetworkGraph& graph);
void write_flows(const FlowSet& flows, const std::filesystem::path& path);

// The weights document must cover exactly the graph's edges. weight_max
// defaults to the largest weight read.
WeightVector read_weights(const std::filesystem::path& path, const NetworkGraph& graph,
                          std::optional<int> weight_max = std::nullopt);
void write_weights(const WeightVector& weights, const NetworkGraph& graph,
                   const std::filesystem::path& path);

}  // namespace galb
