#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galb/experiments.hpp"

namespace {

// Exit codes: 0 success, 1 input or validation error, 2 enumeration budget
// exceeded, 3 internal fault.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInternal = 3;

struct GaFlags {
  int pop_size = 50;
  double mutation_prob = 0.10;
  int generations = 500;
  int stagnation = 100;
  int weight_max = 9;

  void attach(CLI::App* cmd) {
    cmd->add_option("--pop-size", pop_size, "Population size (even)")->capture_default_str();
    cmd->add_option("--mutation-prob", mutation_prob, "Per-individual mutation probability")
        ->capture_default_str();
    cmd->add_option("--generations", generations, "Maximum generations")->capture_default_str();
    cmd->add_option("--stagnation", stagnation, "Stop after this many generations without improvement")
        ->capture_default_str();
    cmd->add_option("--weight-max", weight_max, "Largest link weight v")->capture_default_str();
  }

  galb::GAConfig config(std::uint64_t seed) const {
    return galb::GAConfig{pop_size, mutation_prob, generations, stagnation, weight_max, seed};
  }
};

void emit_report(const galb::ExperimentReport& report, const std::optional<std::string>& out_path) {
  const std::string csv = report.to_csv();
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) {
      throw galb::DocumentError("cannot write report to " + *out_path);
    }
    out << csv;
    std::cerr << report.experiment_id << ": wrote " << report.runs.size() << " run rows to "
              << *out_path << "\n";
  } else {
    std::cout << csv;
  }
  for (const galb::AggregateRow& a : report.aggregates) {
    std::cerr << report.experiment_id << " " << a.algorithm << " " << a.profile
              << " flows=" << a.flow_count << " runs=" << a.runs
              << " mean_max_load=" << a.mean_max_load
              << " mean_elapsed_s=" << a.mean_elapsed_seconds;
    if (a.effectiveness_pct) {
      std::cerr << " effectiveness=" << *a.effectiveness_pct << "%";
    }
    std::cerr << "\n";
  }
}

galb::TopologyProfile profile_from_flags(const std::string& name, int nodes, int edges,
                                         int weight_max, int flows) {
  if (!name.empty()) {
    auto profile = galb::find_profile(name);
    if (!profile) {
      throw galb::ConfigError("unknown profile \"" + name + "\"; built-ins: n4e5 n5e11 n6e15 n10e39 n25e219 n50e872");
    }
    if (flows >= 0) {
      profile->flow_count = flows;
    }
    return *profile;
  }
  if (nodes <= 0 || edges <= 0) {
    throw galb::ConfigError("either --profile or both --nodes and --edges are required");
  }
  galb::TopologyProfile profile{"custom", nodes, edges, weight_max, flows >= 0 ? flows : 0,
                                std::nullopt};
  return profile;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link-weight load balancing workbench: evolves integer link weights to "
               "minimize the maximum link load under shortest-path routing, with exact "
               "and heuristic baselines"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Master seed; all runs derive from it")->capture_default_str();

  // generate
  auto* cmd_generate = app.add_subcommand("generate", "Write a random topology and flow set");
  std::string gen_profile;
  int gen_nodes = 0, gen_edges = 0, gen_weight_max = 9, gen_flows = -1;
  std::string gen_out_topology = "topology.json", gen_out_flows = "flows.json";
  cmd_generate->add_option("--profile", gen_profile, "Built-in profile name, e.g. n10e39");
  cmd_generate->add_option("--nodes", gen_nodes, "Node count for a custom profile");
  cmd_generate->add_option("--edges", gen_edges, "Edge count for a custom profile");
  cmd_generate->add_option("--weight-max", gen_weight_max, "Largest link weight v")
      ->capture_default_str();
  cmd_generate->add_option("--flows", gen_flows, "Demand count (profile default when omitted)");
  cmd_generate->add_option("--out-topology", gen_out_topology, "Topology document path")
      ->capture_default_str();
  cmd_generate->add_option("--out-flows", gen_out_flows, "Flows document path")
      ->capture_default_str();

  // optimize
  auto* cmd_optimize = app.add_subcommand("optimize", "Evolve link weights for given topology and flows");
  std::string opt_topology, opt_flows;
  std::optional<std::string> opt_out;
  GaFlags opt_ga;
  cmd_optimize->add_option("--topology", opt_topology, "Topology document")->required();
  cmd_optimize->add_option("--flows", opt_flows, "Flows document")->required();
  cmd_optimize->add_option("--out", opt_out, "Weights document path (stdout when omitted)");
  opt_ga.attach(cmd_optimize);

  // bruteforce
  auto* cmd_bruteforce = app.add_subcommand("bruteforce", "Exhaustive optimum over all weight vectors");
  std::string bf_topology, bf_flows;
  std::optional<std::string> bf_out;
  int bf_weight_max = 9;
  cmd_bruteforce->add_option("--topology", bf_topology, "Topology document")->required();
  cmd_bruteforce->add_option("--flows", bf_flows, "Flows document")->required();
  cmd_bruteforce->add_option("--weight-max", bf_weight_max, "Largest link weight v")
      ->capture_default_str();
  cmd_bruteforce->add_option("--out", bf_out, "Witness weights document path");

  // effectiveness
  auto* cmd_effectiveness =
      app.add_subcommand("effectiveness", "Before/after load means across flow counts");
  std::string eff_profile = "n10e39";
  std::vector<int> eff_flow_counts{20, 30, 40, 50, 100, 200};
  int eff_runs = 10;
  std::optional<std::string> eff_out;
  GaFlags eff_ga;
  cmd_effectiveness->add_option("--profile", eff_profile, "Built-in profile name")
      ->capture_default_str();
  cmd_effectiveness->add_option("--flow-counts", eff_flow_counts, "Demand counts to sweep")
      ->delimiter(',')
      ->capture_default_str();
  cmd_effectiveness->add_option("--runs", eff_runs, "Runs per flow count")->capture_default_str();
  cmd_effectiveness->add_option("--out", eff_out, "CSV path (stdout when omitted)");
  eff_ga.attach(cmd_effectiveness);

  // timing
  auto* cmd_timing = app.add_subcommand("timing", "Mean GA solve time per profile");
  std::vector<std::string> tim_profiles{"n4e5", "n5e11", "n6e15", "n10e39", "n25e219", "n50e872"};
  int tim_runs = 10;
  std::optional<std::string> tim_out;
  GaFlags tim_ga;
  cmd_timing->add_option("--profiles", tim_profiles, "Profiles to time")
      ->delimiter(',')
      ->capture_default_str();
  cmd_timing->add_option("--runs", tim_runs, "Runs per profile")->capture_default_str();
  cmd_timing->add_option("--out", tim_out, "CSV path (stdout when omitted)");
  tim_ga.attach(cmd_timing);

  // compare
  auto* cmd_compare = app.add_subcommand("compare", "SDNGALB vs ACOLB vs DSPA on identical instances");
  std::string cmp_profile = "n10e39";
  int cmp_runs = 100;
  int cmp_flows = -1;
  int cmp_ants = 10, cmp_iterations = 50;
  std::optional<std::string> cmp_out;
  GaFlags cmp_ga;
  cmd_compare->add_option("--profile", cmp_profile, "Built-in profile name")->capture_default_str();
  cmd_compare->add_option("--flows", cmp_flows, "Demand count (profile default when omitted)");
  cmd_compare->add_option("--runs", cmp_runs, "Instances per algorithm")->capture_default_str();
  cmd_compare->add_option("--ants", cmp_ants, "Ant count per iteration")->capture_default_str();
  cmd_compare->add_option("--iterations", cmp_iterations, "Ant-system iterations")
      ->capture_default_str();
  cmd_compare->add_option("--out", cmp_out, "CSV path (stdout when omitted)");
  cmp_ga.attach(cmd_compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(cmd_generate)) {
      const galb::TopologyProfile profile =
          profile_from_flags(gen_profile, gen_nodes, gen_edges, gen_weight_max, gen_flows);
      const galb::NetworkGraph graph =
          galb::generate_topology(profile, galb::derive_seed(seed, 0));
      const galb::FlowSet flows =
          galb::generate_flows(graph, profile.flow_count, galb::derive_seed(seed, 1));
      galb::write_topology(graph, gen_out_topology);
      galb::write_flows(flows, gen_out_flows);
      std::cerr << "generated " << profile.name << ": nodes=" << graph.node_count()
                << " edges=" << graph.edge_count() << " flows=" << flows.size()
                << " connectivity=" << galb::connectivity(graph) << "%";
      if (profile.reference_cn) {
        std::cerr << " (reference " << *profile.reference_cn << "%)";
      }
      std::cerr << "\n";
      return kExitOk;
    }

    if (app.got_subcommand(cmd_optimize)) {
      const galb::NetworkGraph graph = galb::read_topology(opt_topology);
      const galb::FlowSet flows = galb::read_flows(opt_flows, graph);

      const galb::BaselineResult before =
          galb::dspa_route(graph, flows, opt_ga.weight_max, galb::derive_seed(seed, 1));
      const galb::OptimizationResult result =
          galb::optimize(graph, flows, opt_ga.config(galb::derive_seed(seed, 2)));

      if (opt_out) {
        galb::write_weights(result.best_weights, graph, *opt_out);
      } else {
        for (std::size_t i = 0; i < graph.edges().size(); ++i) {
          const galb::Edge& e = graph.edges()[i];
          std::cout << e.src << "," << e.dst << "," << result.best_weights.weights[i] << "\n";
        }
      }
      std::cerr << "before_max_load=" << before.max_load
                << " after_max_load=" << result.best_fitness
                << " generations=" << result.generations_run
                << " stop_reason=" << galb::to_string(result.stop_reason)
                << " elapsed_s=" << result.elapsed_seconds << "\n";
      return kExitOk;
    }

    if (app.got_subcommand(cmd_bruteforce)) {
      const galb::NetworkGraph graph = galb::read_topology(bf_topology);
      const galb::FlowSet flows = galb::read_flows(bf_flows, graph);
      const galb::BaselineResult result = galb::brute_force(graph, flows, bf_weight_max);
      const auto& weights = std::get<galb::WeightVector>(result.weights_or_routes);
      if (bf_out) {
        galb::write_weights(weights, graph, *bf_out);
      }
      std::cout << "optimum_max_load=" << result.max_load << "\n";
      std::cout << "weights=";
      for (std::size_t i = 0; i < weights.weights.size(); ++i) {
        std::cout << (i ? "," : "") << weights.weights[i];
      }
      std::cout << "\n";
      std::cerr << "elapsed_s=" << result.elapsed_seconds << "\n";
      return kExitOk;
    }

    if (app.got_subcommand(cmd_effectiveness)) {
      galb::EffectivenessParams params;
      params.profile = profile_from_flags(eff_profile, 0, 0, eff_ga.weight_max, -1);
      params.flow_counts = eff_flow_counts;
      params.runs = eff_runs;
      params.ga = eff_ga.config(0);
      params.ga.weight_max = params.profile.weight_max;
      params.master_seed = seed;
      emit_report(galb::run_effectiveness(params), eff_out);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_timing)) {
      galb::TimingParams params;
      for (const std::string& name : tim_profiles) {
        params.profiles.push_back(profile_from_flags(name, 0, 0, tim_ga.weight_max, -1));
      }
      params.runs = tim_runs;
      params.ga = tim_ga.config(0);
      params.master_seed = seed;
      emit_report(galb::run_timing(params), tim_out);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_compare)) {
      galb::CompareParams params;
      params.profile = profile_from_flags(cmp_profile, 0, 0, cmp_ga.weight_max, cmp_flows);
      params.runs = cmp_runs;
      params.ga = cmp_ga.config(0);
      params.ga.weight_max = params.profile.weight_max;
      params.aco.ant_count = cmp_ants;
      params.aco.iterations = cmp_iterations;
      params.master_seed = seed;
      emit_report(galb::run_compare(params), cmp_out);
      return kExitOk;
    }
  } catch (const galb::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const galb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
