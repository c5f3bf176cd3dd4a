#include "galb/ga.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace galb {

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::stagnation:
      return "stagnation";
    case StopReason::max_generations:
      return "max_generations";
  }
  return "unknown";
}

void validate(const GAConfig& config) {
  if (config.population_size <= 0 || config.population_size % 2 != 0) {
    throw ConfigError("population size must be positive and even, got " +
                      std::to_string(config.population_size));
  }
  if (config.mutation_prob < 0.0 || config.mutation_prob > 1.0) {
    throw ConfigError("mutation probability must be in [0, 1], got " +
                      std::to_string(config.mutation_prob));
  }
  if (config.max_generations < 1) {
    throw ConfigError("max generations must be >= 1, got " +
                      std::to_string(config.max_generations));
  }
  if (config.stagnation_limit < 1 || config.stagnation_limit > config.max_generations) {
    throw ConfigError("stagnation limit must be in [1, max_generations], got " +
                      std::to_string(config.stagnation_limit));
  }
  if (config.weight_max < 1) {
    throw ConfigError("weight_max must be >= 1, got " + std::to_string(config.weight_max));
  }
}

std::vector<Individual> init_population(const GAConfig& config, int edge_count, Rng& rng) {
  validate(config);
  if (edge_count < 1) {
    throw ConfigError("edge count must be >= 1, got " + std::to_string(edge_count));
  }
  std::vector<Individual> population;
  population.reserve(static_cast<std::size_t>(config.population_size));
  for (int i = 0; i < config.population_size; ++i) {
    WeightVector chromosome;
    chromosome.weight_max = config.weight_max;
    chromosome.weights.reserve(static_cast<std::size_t>(edge_count));
    for (int g = 0; g < edge_count; ++g) {
      chromosome.weights.push_back(static_cast<int>(rng.uniform_int(1, config.weight_max)));
    }
    population.push_back(Individual{std::move(chromosome), std::nullopt});
  }
  return population;
}

std::vector<Individual> rank(std::vector<Individual> population) {
  for (const Individual& ind : population) {
    if (!ind.fitness.has_value()) {
      throw ConfigError("cannot rank an unevaluated individual");
    }
  }
  std::stable_sort(population.begin(), population.end(),
                   [](const Individual& a, const Individual& b) {
                     return *a.fitness < *b.fitness;
                   });
  return population;
}

std::pair<Individual, Individual> crossover(const Individual& parent_a,
                                            const Individual& parent_b, int point) {
  const auto& a = parent_a.chromosome.weights;
  const auto& b = parent_b.chromosome.weights;
  if (a.size() != b.size()) {
    throw ConfigError("crossover parents have different chromosome lengths");
  }
  const int length = static_cast<int>(a.size());
  if (point < 1 || point > length - 1) {
    throw ConfigError("crossover point " + std::to_string(point) + " outside [1, " +
                      std::to_string(length - 1) + "]");
  }
  Individual child_a{parent_a.chromosome, std::nullopt};
  Individual child_b{parent_b.chromosome, std::nullopt};
  for (int i = point; i < length; ++i) {
    child_a.chromosome.weights[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)];
    child_b.chromosome.weights[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
  }
  return {std::move(child_a), std::move(child_b)};
}

Individual mutate(Individual individual, const GAConfig& config, Rng& rng) {
  if (rng.uniform01() < config.mutation_prob) {
    auto& genes = individual.chromosome.weights;
    const auto idx = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(genes.size()) - 1));
    const int value = static_cast<int>(rng.uniform_int(1, config.weight_max));
    if (genes[idx] != value) {
      genes[idx] = value;
      individual.fitness.reset();
    }
  }
  return individual;
}

OptimizationResult optimize(const NetworkGraph& graph, const FlowSet& flows,
                            const GAConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  Rng rng(config.rng_seed);
  FitnessEvaluator evaluator(graph, flows);
  const int length = graph.edge_count();

  std::vector<Individual> population = init_population(config, length, rng);
  for (Individual& ind : population) {
    ind.fitness = evaluator.max_load(ind.chromosome);
  }

  auto best_of = [](const std::vector<Individual>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
      if (*pop[i].fitness < *pop[best].fitness) {
        best = i;
      }
    }
    return pop[best];
  };

  Individual best = best_of(population);
  OptimizationResult result;
  result.fitness_history.push_back(*best.fitness);

  int generation = 0;
  int stagnation = 0;
  while (generation < config.max_generations && stagnation < config.stagnation_limit) {
    const std::vector<Individual> ranked = rank(std::move(population));

    std::vector<Individual> offspring;
    offspring.reserve(ranked.size());
    for (std::size_t pair = 0; pair + 1 < ranked.size(); pair += 2) {
      if (length >= 2) {
        const int point = static_cast<int>(rng.uniform_int(1, length - 1));
        auto [child_a, child_b] = crossover(ranked[pair], ranked[pair + 1], point);
        offspring.push_back(std::move(child_a));
        offspring.push_back(std::move(child_b));
      } else {
        // Single-gene chromosomes admit no crossover point.
        offspring.push_back(Individual{ranked[pair].chromosome, std::nullopt});
        offspring.push_back(Individual{ranked[pair + 1].chromosome, std::nullopt});
      }
    }
    for (Individual& child : offspring) {
      child = mutate(std::move(child), config, rng);
    }
    for (Individual& child : offspring) {
      if (!child.fitness.has_value()) {
        child.fitness = evaluator.max_load(child.chromosome);
      }
    }

    // Elitism: the best individual so far replaces the worst offspring.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < offspring.size(); ++i) {
      if (*offspring[i].fitness > *offspring[worst].fitness) {
        worst = i;
      }
    }
    offspring[worst] = best;

    population = std::move(offspring);
    ++generation;

    const Individual generation_best = best_of(population);
    if (*generation_best.fitness < *best.fitness) {
      best = generation_best;
      stagnation = 0;
    } else {
      ++stagnation;
    }
    result.fitness_history.push_back(*best.fitness);
  }

  result.best_weights = best.chromosome;
  result.best_fitness = *best.fitness;
  result.generations_run = generation;
  result.stop_reason = generation >= config.max_generations ? StopReason::max_generations
                                                            : StopReason::stagnation;
  result.routing_table = evaluator.evaluate(best.chromosome).routing_table;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace galb
