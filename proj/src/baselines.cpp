#include "galb/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

namespace galb {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string candidate_count_str(int weight_max, int edge_count, double approx) {
  char buf[64];
  if (approx <= 9e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", approx);
  } else {
    std::snprintf(buf, sizeof(buf), "%.3e", approx);
  }
  return std::to_string(weight_max) + "^" + std::to_string(edge_count) + " = " + buf;
}

}  // namespace

void validate(const ACOConfig& config) {
  if (config.ant_count < 1) {
    throw ConfigError("ant count must be >= 1, got " + std::to_string(config.ant_count));
  }
  if (config.iterations < 1) {
    throw ConfigError("iterations must be >= 1, got " + std::to_string(config.iterations));
  }
  if (config.evaporation_rate <= 0.0 || config.evaporation_rate >= 1.0) {
    throw ConfigError("evaporation rate must be in (0, 1), got " +
                      std::to_string(config.evaporation_rate));
  }
  if (config.pheromone_exponent < 0.0 || config.heuristic_exponent < 0.0) {
    throw ConfigError("pheromone and heuristic exponents must be non-negative");
  }
}

const char* to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::BF:
      return "BF";
    case BaselineKind::ACOLB:
      return "ACOLB";
    case BaselineKind::DSPA:
      return "DSPA";
  }
  return "unknown";
}

BaselineResult brute_force(const NetworkGraph& graph, const FlowSet& flows, int weight_max) {
  if (weight_max < 1) {
    throw ConfigError("weight_max must be >= 1, got " + std::to_string(weight_max));
  }
  const Stopwatch watch;
  const int edge_count = graph.edge_count();
  const double candidates = std::pow(static_cast<double>(weight_max), edge_count);
  if (candidates > kBruteForceBudget) {
    throw BudgetExceededError("exhaustive search over " +
                                  candidate_count_str(weight_max, edge_count, candidates) +
                                  " candidate weight vectors exceeds the budget of 1e8",
                              candidates);
  }

  FitnessEvaluator evaluator(graph, flows);
  WeightVector current{std::vector<int>(static_cast<std::size_t>(edge_count), 1), weight_max};
  WeightVector best = current;
  Load best_load = evaluator.max_load(current);

  // Odometer over genes, last gene fastest: lexicographic ascending order,
  // so keeping strict improvements returns the lexicographically smallest
  // optimum.
  for (;;) {
    int pos = edge_count - 1;
    while (pos >= 0 && current.weights[static_cast<std::size_t>(pos)] == weight_max) {
      current.weights[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++current.weights[static_cast<std::size_t>(pos)];
    const Load load = evaluator.max_load(current);
    if (load < best_load) {
      best_load = load;
      best = current;
    }
  }

  return BaselineResult{BaselineKind::BF, best_load, best, watch.seconds()};
}

namespace {

struct AntSolution {
  std::vector<Path> routes;
  Load max_load = 0;
};

double pow_spec(double base, double exponent) {
  if (exponent == 0.0) {
    return 1.0;
  }
  if (exponent == 1.0) {
    return base;
  }
  if (exponent == 2.0) {
    return base * base;
  }
  return std::pow(base, exponent);
}

// Builds one walk from flow.src to flow.dst. tau_pow holds pheromone
// already raised to the configured exponent (constant within an
// iteration). Commits `units` per traversed edge into `loads` when the
// walk succeeds; rolls back otherwise.
Path build_walk(const NetworkGraph& graph, const Demand& flow, Load units,
                const std::vector<double>& tau_pow, std::vector<Load>& loads,
                const ACOConfig& config, Rng& rng, std::vector<double>& scores) {
  const int step_cap = std::max(16, 10 * graph.node_count());
  constexpr int kAttempts = 8;

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Path path;
    path.flow = flow;
    std::vector<int> taken;  // edge indices, for rollback
    NodeId u = flow.src;
    for (int step = 0; step < step_cap && u != flow.dst; ++step) {
      const auto out = graph.out_edges(u);
      scores.clear();
      double total = 0.0;
      for (const OutEdge& oe : out) {
        const double eta =
            1.0 / (1.0 + static_cast<double>(loads[static_cast<std::size_t>(oe.edge_index)]));
        const double score = tau_pow[static_cast<std::size_t>(oe.edge_index)] *
                             pow_spec(eta, config.heuristic_exponent);
        scores.push_back(score);
        total += score;
      }
      const double pick = rng.uniform01() * total;
      double acc = 0.0;
      std::size_t chosen = out.size() - 1;
      for (std::size_t k = 0; k < scores.size(); ++k) {
        acc += scores[k];
        if (pick < acc) {
          chosen = k;
          break;
        }
      }
      const OutEdge& oe = out[chosen];
      path.edge_sequence.push_back(graph.edges()[static_cast<std::size_t>(oe.edge_index)]);
      taken.push_back(oe.edge_index);
      loads[static_cast<std::size_t>(oe.edge_index)] += units;
      u = oe.to;
    }
    if (u == flow.dst) {
      path.total_weight = static_cast<std::int64_t>(path.edge_sequence.size());
      return path;
    }
    for (int ei : taken) {
      loads[static_cast<std::size_t>(ei)] -= units;
    }
  }

  // Walk kept missing the destination: fall back to the hop-count path.
  WeightVector ones{std::vector<int>(static_cast<std::size_t>(graph.edge_count()), 1), 1};
  Path path = shortest_path(graph, ones, flow.src, flow.dst);
  path.flow = flow;
  for (const Edge& e : path.edge_sequence) {
    loads[static_cast<std::size_t>(graph.edge_index(e.src, e.dst))] += units;
  }
  return path;
}

}  // namespace

BaselineResult aco_optimize(const NetworkGraph& graph, const FlowSet& flows,
                            const ACOConfig& config) {
  validate(config);
  const Stopwatch watch;
  Rng rng(config.rng_seed);

  const auto edge_count = static_cast<std::size_t>(graph.edge_count());
  std::vector<double> pheromone(edge_count, 1.0);
  std::vector<double> tau_pow(edge_count, 0.0);
  std::optional<AntSolution> global_best;

  std::vector<Load> loads(edge_count, 0);
  std::vector<double> scores;
  for (int iter = 0; iter < config.iterations; ++iter) {
    for (std::size_t e = 0; e < edge_count; ++e) {
      tau_pow[e] = pow_spec(std::max(pheromone[e], 1e-12), config.pheromone_exponent);
    }
    std::optional<AntSolution> iteration_best;
    for (int ant = 0; ant < config.ant_count; ++ant) {
      AntSolution solution;
      solution.routes.reserve(flows.demands().size());
      std::fill(loads.begin(), loads.end(), 0);
      for (const Demand& dm : flows.demands()) {
        const Load units = dm.units * flows.granularity();
        solution.routes.push_back(
            build_walk(graph, dm, units, tau_pow, loads, config, rng, scores));
      }
      solution.max_load =
          loads.empty() ? 0 : *std::max_element(loads.begin(), loads.end());
      if (!iteration_best || solution.max_load < iteration_best->max_load) {
        iteration_best = solution;
      }
      if (!global_best || solution.max_load < global_best->max_load) {
        global_best = std::move(solution);
      }
    }
    for (double& tau : pheromone) {
      tau = std::max(tau * (1.0 - config.evaporation_rate), 1e-12);
    }
    if (iteration_best && iteration_best->max_load > 0) {
      const double deposit = 1.0 / static_cast<double>(iteration_best->max_load);
      for (const Path& route : iteration_best->routes) {
        for (const Edge& e : route.edge_sequence) {
          pheromone[static_cast<std::size_t>(graph.edge_index(e.src, e.dst))] += deposit;
        }
      }
    }
  }

  if (!global_best) {
    global_best = AntSolution{};  // no flows
  }
  return BaselineResult{BaselineKind::ACOLB, global_best->max_load,
                        std::move(global_best->routes), watch.seconds()};
}

BaselineResult dspa_route(const NetworkGraph& graph, const FlowSet& flows, int weight_max,
                          std::uint64_t rng_seed) {
  if (weight_max < 1) {
    throw ConfigError("weight_max must be >= 1, got " + std::to_string(weight_max));
  }
  const Stopwatch watch;
  Rng rng(rng_seed);
  WeightVector weights;
  weights.weight_max = weight_max;
  weights.weights.reserve(static_cast<std::size_t>(graph.edge_count()));
  for (int i = 0; i < graph.edge_count(); ++i) {
    weights.weights.push_back(static_cast<int>(rng.uniform_int(1, weight_max)));
  }
  FitnessEvaluator evaluator(graph, flows);
  const Load load = evaluator.max_load(weights);
  return BaselineResult{BaselineKind::DSPA, load, std::move(weights), watch.seconds()};
}

}  // namespace galb
