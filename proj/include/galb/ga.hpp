#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "galb/routing.hpp"
#include "galb/rng.hpp"

namespace galb {

enum class StopReason { stagnation, max_generations };

const char* to_string(StopReason reason);

struct GAConfig {
  int population_size = 50;
  double mutation_prob = 0.10;
  int max_generations = 500;
  int stagnation_limit = 100;
  int weight_max = 9;
  std::uint64_t rng_seed = 1;
};

// Throws ConfigError unless: population size positive and even,
// mutation_prob in [0,1], 1 <= stagnation_limit <= max_generations,
// weight_max >= 1.
void validate(const GAConfig& config);

struct Individual {
  WeightVector chromosome;
  std::optional<Load> fitness;  // max link load, set after evaluation

  friend bool operator==(const Individual&, const Individual&) = default;
};

struct OptimizationResult {
  WeightVector best_weights;
  Load best_fitness = 0;
  RoutingTable routing_table;
  int generations_run = 0;
  StopReason stop_reason = StopReason::max_generations;
  // Best-so-far fitness after the initial population and after each
  // generation; non-increasing by elitism.
  std::vector<Load> fitness_history;
  double elapsed_seconds = 0.0;
};

// population_size chromosomes of length edge_count, genes uniform in
// [1, weight_max]. Draw order: chromosome by chromosome, gene by gene.
std::vector<Individual> init_population(const GAConfig& config, int edge_count, Rng& rng);

// Ascending fitness; equal fitness keeps input order. Throws ConfigError
// on an unevaluated individual.
std::vector<Individual> rank(std::vector<Individual> population);

// One-point crossover; genes [point, length) are exchanged. Requires
// 1 <= point <= length-1. Children are unevaluated.
std::pair<Individual, Individual> crossover(const Individual& parent_a,
                                            const Individual& parent_b, int point);

// With probability mutation_prob, redraws one uniformly chosen gene
// uniformly from [1, weight_max]; otherwise returns the individual
// unchanged. Consumes one uniform01 draw always, two more draws when the
// mutation fires.
Individual mutate(Individual individual, const GAConfig& config, Rng& rng);

// Generational loop: evaluate, rank, cross consecutive ranked pairs at an
// independently drawn point, mutate offspring, carry the best-ever
// individual into the next generation in place of the worst offspring.
// Stops when the best-ever fitness has not improved for stagnation_limit
// consecutive generations or max_generations is reached. Deterministic for
// a fixed rng_seed (elapsed_seconds excepted).
OptimizationResult optimize(const NetworkGraph& graph, const FlowSet& flows,
                            const GAConfig& config);

}  // namespace galb
