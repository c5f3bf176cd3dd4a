#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "galb/baselines.hpp"
#include "galb/ga.hpp"
#include "galb/workbench.hpp"

using namespace galb;

TEST_CASE("brute force on a single-edge graph returns the all-ones witness") {
  const NetworkGraph g(2, {{0, 1}});
  FlowSet flows;
  flows.add(0, 1, 3);
  const BaselineResult result = brute_force(g, flows, 4);
  CHECK(result.max_load == 3);
  CHECK(std::get<WeightVector>(result.weights_or_routes).weights == std::vector<int>{1});
}

TEST_CASE("brute force optimum on the n4e5 fixture is pinned") {
  const NetworkGraph g = test::fixture_graph_n4e5();
  const FlowSet flows = test::fixture_flows_n4e5();
  const BaselineResult result = brute_force(g, flows, 5);
  // Frozen from the first enumeration of all 5^5 = 3125 weight vectors:
  // three demands are forced through edge (3,0) and three through (2,3),
  // so no weight assignment beats a maximum load of 3.
  CHECK(result.max_load == 3);
  CHECK(std::get<WeightVector>(result.weights_or_routes).weights ==
        std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("brute force refuses candidate counts beyond the budget") {
  const TopologyProfile profile = *find_profile("n10e39");
  const NetworkGraph g = generate_topology(profile, 1);
  const FlowSet flows = generate_flows(g, 5, 2);
  CHECK_THROWS_AS(brute_force(g, flows, 9), BudgetExceededError);
  try {
    brute_force(g, flows, 9);
  } catch (const BudgetExceededError& e) {
    CHECK(e.approx_candidates() == doctest::Approx(std::pow(9.0, 39)).epsilon(1e-9));
    CHECK(std::string(e.what()).find("9^39") != std::string::npos);
  }
}

TEST_CASE("brute force result never exceeds any heuristic's result") {
  Rng seeds(31);
  for (int trial = 0; trial < 10; ++trial) {
    const TopologyProfile profile{"tiny", 4, 6, 3, 5, std::nullopt};
    const std::uint64_t seed = seeds.next_u64();
    const NetworkGraph g = generate_topology(profile, seed);
    const FlowSet flows = generate_flows(g, 5, seed + 1);

    const BaselineResult exact = brute_force(g, flows, 3);

    GAConfig ga;
    ga.population_size = 10;
    ga.max_generations = 30;
    ga.stagnation_limit = 10;
    ga.weight_max = 3;
    ga.rng_seed = seed;
    CHECK(exact.max_load <= optimize(g, flows, ga).best_fitness);

    ACOConfig aco;
    aco.ant_count = 5;
    aco.iterations = 10;
    aco.rng_seed = seed;
    CHECK(exact.max_load <= aco_optimize(g, flows, aco).max_load);

    CHECK(exact.max_load <= dspa_route(g, flows, 3, seed).max_load);
  }
}

TEST_CASE("dspa equals a seeded uniform draw routed once") {
  const NetworkGraph g = test::fixture_graph_n4e5();
  const FlowSet flows = test::fixture_flows_n4e5();
  const BaselineResult result = dspa_route(g, flows, 5, 404);

  // Replay the documented draw: genes in canonical edge order.
  Rng rng(404);
  WeightVector expected;
  expected.weight_max = 5;
  for (int i = 0; i < g.edge_count(); ++i) {
    expected.weights.push_back(static_cast<int>(rng.uniform_int(1, 5)));
  }
  CHECK(std::get<WeightVector>(result.weights_or_routes) == expected);
  CHECK(result.max_load == evaluate_fitness(g, expected, flows).max_load);

  SUBCASE("same seed, same result") {
    const BaselineResult again = dspa_route(g, flows, 5, 404);
    CHECK(again.max_load == result.max_load);
    CHECK(std::get<WeightVector>(again.weights_or_routes) ==
          std::get<WeightVector>(result.weights_or_routes));
  }
}

TEST_CASE("dspa with weight_max 1 is hop-count routing") {
  const NetworkGraph g = test::fixture_graph_n4e5();
  const FlowSet flows = test::fixture_flows_n4e5();
  const BaselineResult result = dspa_route(g, flows, 1, 9);
  CHECK(result.max_load == evaluate_fitness(g, test::unit_weights(g), flows).max_load);
}

TEST_CASE("aco on a chain takes the only route") {
  const NetworkGraph g = test::chain_graph(4);
  FlowSet flows;
  flows.add(0, 3, 2);
  ACOConfig cfg;
  cfg.ant_count = 3;
  cfg.iterations = 5;
  cfg.rng_seed = 12;
  const BaselineResult result = aco_optimize(g, flows, cfg);
  CHECK(result.max_load == 2);
  const auto& routes = std::get<std::vector<Path>>(result.weights_or_routes);
  REQUIRE(routes.size() == 1);
  CHECK(routes[0].edge_sequence == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("aco reported load matches re-accumulating its routes") {
  const TopologyProfile profile = *find_profile("n6e15");
  const NetworkGraph g = generate_topology(profile, 21);
  const FlowSet flows = generate_flows(g, 8, 22);
  ACOConfig cfg;
  cfg.ant_count = 4;
  cfg.iterations = 6;
  cfg.rng_seed = 23;
  const BaselineResult result = aco_optimize(g, flows, cfg);
  const auto& routes = std::get<std::vector<Path>>(result.weights_or_routes);
  REQUIRE(routes.size() == flows.demands().size());

  LoadMatrix loads(g);
  for (std::size_t i = 0; i < routes.size(); ++i) {
    const Path& p = routes[i];
    CHECK(p.flow == flows.demands()[i]);
    REQUIRE_FALSE(p.edge_sequence.empty());
    CHECK(p.edge_sequence.front().src == p.flow.src);
    CHECK(p.edge_sequence.back().dst == p.flow.dst);
    for (std::size_t k = 1; k < p.edge_sequence.size(); ++k) {
      CHECK(p.edge_sequence[k - 1].dst == p.edge_sequence[k].src);
    }
    accumulate_load(loads, p.edge_sequence, p.flow.units);
  }
  CHECK(loads.max() == result.max_load);

  SUBCASE("deterministic per seed") {
    const BaselineResult again = aco_optimize(g, flows, cfg);
    CHECK(again.max_load == result.max_load);
    CHECK(std::get<std::vector<Path>>(again.weights_or_routes) == routes);
  }
}

TEST_CASE("aco degenerate config is one stochastic construction") {
  const NetworkGraph g = test::fixture_graph_n4e5();
  const FlowSet flows = test::fixture_flows_n4e5();
  ACOConfig cfg;
  cfg.ant_count = 1;
  cfg.iterations = 1;
  cfg.rng_seed = 3;
  const BaselineResult result = aco_optimize(g, flows, cfg);
  const auto& routes = std::get<std::vector<Path>>(result.weights_or_routes);
  LoadMatrix loads(g);
  for (const Path& p : routes) {
    accumulate_load(loads, p.edge_sequence, p.flow.units);
  }
  CHECK(result.max_load == loads.max());
}

TEST_CASE("aco config validation") {
  ACOConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.ant_count = 0;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.ant_count = 1;
  cfg.evaporation_rate = 1.0;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
}
