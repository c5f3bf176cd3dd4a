#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "galb/routing.hpp"
#include "galb/rng.hpp"

namespace galb {

struct ACOConfig {
  int ant_count = 10;
  int iterations = 50;
  double evaporation_rate = 0.5;
  double pheromone_exponent = 1.0;  // alpha
  double heuristic_exponent = 2.0;  // beta, applied to 1/(edge load + 1)
  std::uint64_t rng_seed = 1;
};

void validate(const ACOConfig& config);

enum class BaselineKind { BF, ACOLB, DSPA };

const char* to_string(BaselineKind kind);

struct BaselineResult {
  BaselineKind label = BaselineKind::DSPA;
  Load max_load = 0;
  // BF and DSPA yield a weight vector; ACOLB yields explicit per-flow routes.
  std::variant<WeightVector, std::vector<Path>> weights_or_routes;
  double elapsed_seconds = 0.0;
};

// Refuse exhaustive searches beyond this many candidate weight vectors.
inline constexpr double kBruteForceBudget = 1e8;

// Exact optimum: enumerates every weight vector in [1, weight_max]^|E| in
// lexicographic order and returns the lexicographically smallest optimal
// one. Throws BudgetExceededError when weight_max^|E| exceeds the budget.
BaselineResult brute_force(const NetworkGraph& graph, const FlowSet& flows, int weight_max);

// Ant-system router: each ant builds one walk per flow, choosing the next
// edge with probability proportional to pheromone^alpha * (1/(load+1))^beta
// where load counts the units this ant has already committed. Pheromone
// evaporates globally each iteration and the iteration's best ant deposits
// on its routes. Walks may revisit nodes; a hop-count shortest path stands
// in when a walk repeatedly fails to reach its destination.
BaselineResult aco_optimize(const NetworkGraph& graph, const FlowSet& flows,
                            const ACOConfig& config);

// Draws one uniform weight vector in [1, weight_max]^|E| (genes in
// canonical edge order) and routes once. No optimization.
BaselineResult dspa_route(const NetworkGraph& graph, const FlowSet& flows, int weight_max,
                          std::uint64_t rng_seed);

}  // namespace galb
