#include "galb/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace galb {

namespace {

std::string fmt(double value, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, value);
  return buf;
}

std::string mean_str(double value) { return fmt(value, "%.4f"); }
std::string elapsed_str(double value) { return fmt(value, "%.6f"); }

void append_row(std::ostringstream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const std::string& cell : cells) {
    if (!first) {
      out << ',';
    }
    out << cell;
    first = false;
  }
  out << '\n';
}

}  // namespace

std::optional<int> effectiveness_pct(double mean_before, double mean_after) {
  if (mean_before <= 0.0) {
    return std::nullopt;
  }
  return static_cast<int>(std::llround(100.0 * (1.0 - mean_after / mean_before)));
}

std::vector<AggregateRow> compute_aggregates(const std::vector<RunRecord>& runs) {
  std::vector<AggregateRow> aggregates;
  auto find_group = [&aggregates](const RunRecord& r) -> AggregateRow& {
    for (AggregateRow& a : aggregates) {
      if (a.algorithm == r.algorithm && a.profile == r.profile && a.flow_count == r.flow_count) {
        return a;
      }
    }
    aggregates.push_back(AggregateRow{r.experiment, r.algorithm, r.profile, r.flow_count, 0,
                                      std::nullopt, 0.0, 0.0, std::nullopt});
    return aggregates.back();
  };

  for (const RunRecord& r : runs) {
    AggregateRow& a = find_group(r);
    a.runs += 1;
    a.mean_max_load += static_cast<double>(r.max_load);
    a.mean_elapsed_seconds += r.elapsed_seconds;
    if (r.before_max_load) {
      a.mean_before = a.mean_before.value_or(0.0) + static_cast<double>(*r.before_max_load);
    }
  }
  for (AggregateRow& a : aggregates) {
    a.mean_max_load /= a.runs;
    a.mean_elapsed_seconds /= a.runs;
    if (a.mean_before) {
      *a.mean_before /= a.runs;
      a.effectiveness_pct = effectiveness_pct(*a.mean_before, a.mean_max_load);
    }
  }
  return aggregates;
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const RunRecord& r : runs) {
    append_row(out, {"run", r.experiment, r.algorithm, r.profile, std::to_string(r.flow_count),
                     std::to_string(r.run_index), std::to_string(r.seed),
                     r.before_max_load ? std::to_string(*r.before_max_load) : std::string(),
                     std::to_string(r.max_load), std::string(), elapsed_str(r.elapsed_seconds),
                     r.stop_reason});
  }
  // Mean rows put the aggregated run count in the run column.
  for (const AggregateRow& a : aggregates) {
    append_row(out, {"mean", a.experiment, a.algorithm, a.profile, std::to_string(a.flow_count),
                     std::to_string(a.runs), std::string(),
                     a.mean_before ? mean_str(*a.mean_before) : std::string(),
                     mean_str(a.mean_max_load),
                     a.effectiveness_pct ? std::to_string(*a.effectiveness_pct) : std::string("na"),
                     elapsed_str(a.mean_elapsed_seconds), std::string()});
  }
  return out.str();
}

ExperimentReport run_effectiveness(const EffectivenessParams& params) {
  validate(params.profile);
  validate(params.ga);
  if (params.runs < 1) {
    throw ConfigError("effectiveness experiment requires runs >= 1");
  }

  ExperimentReport report;
  report.experiment_id = "effectiveness";
  const NetworkGraph graph =
      generate_topology(params.profile, derive_seed(params.master_seed, 0));

  for (std::size_t fi = 0; fi < params.flow_counts.size(); ++fi) {
    const int flow_count = params.flow_counts[fi];
    for (int run = 0; run < params.runs; ++run) {
      const std::uint64_t base =
          derive_seed(params.master_seed,
                      1 + fi * static_cast<std::size_t>(params.runs) + static_cast<std::size_t>(run));
      // Unit-flow generation: sweeps may exceed the distinct-pair count, in
      // which case the extra units land as per-pair multiplicities.
      const FlowSet flows = generate_flow_units(graph, flow_count, derive_seed(base, 0));

      const BaselineResult before =
          dspa_route(graph, flows, params.ga.weight_max, derive_seed(base, 1));

      GAConfig ga = params.ga;
      ga.rng_seed = derive_seed(base, 2);
      const OptimizationResult optimized = optimize(graph, flows, ga);

      report.runs.push_back(RunRecord{report.experiment_id, "SDNGALB", params.profile.name,
                                      flow_count, run, base, before.max_load,
                                      optimized.best_fitness, optimized.elapsed_seconds,
                                      to_string(optimized.stop_reason)});
    }
  }
  report.aggregates = compute_aggregates(report.runs);
  return report;
}

ExperimentReport run_timing(const TimingParams& params) {
  validate(params.ga);
  if (params.runs < 1) {
    throw ConfigError("timing experiment requires runs >= 1");
  }
  if (params.profiles.empty()) {
    throw ConfigError("timing experiment requires at least one profile");
  }

  ExperimentReport report;
  report.experiment_id = "timing";
  for (std::size_t pi = 0; pi < params.profiles.size(); ++pi) {
    const TopologyProfile& profile = params.profiles[pi];
    validate(profile);
    const std::uint64_t profile_seed = derive_seed(params.master_seed, pi);
    const NetworkGraph graph = generate_topology(profile, derive_seed(profile_seed, 0));

    GAConfig ga = params.ga;
    ga.weight_max = profile.weight_max;
    for (int run = 0; run < params.runs; ++run) {
      const std::uint64_t base = derive_seed(profile_seed, static_cast<std::uint64_t>(run) + 1);
      const FlowSet flows = generate_flows(graph, profile.flow_count, derive_seed(base, 0));
      ga.rng_seed = derive_seed(base, 2);
      const OptimizationResult optimized = optimize(graph, flows, ga);
      report.runs.push_back(RunRecord{report.experiment_id, "SDNGALB", profile.name,
                                      profile.flow_count, run, base, std::nullopt,
                                      optimized.best_fitness, optimized.elapsed_seconds,
                                      to_string(optimized.stop_reason)});
    }
  }
  report.aggregates = compute_aggregates(report.runs);
  return report;
}

ExperimentReport run_compare(const CompareParams& params) {
  validate(params.profile);
  validate(params.ga);
  validate(params.aco);
  if (params.runs < 1) {
    throw ConfigError("compare experiment requires runs >= 1");
  }

  ExperimentReport report;
  report.experiment_id = "compare";
  for (int run = 0; run < params.runs; ++run) {
    const std::uint64_t base = derive_seed(params.master_seed, static_cast<std::uint64_t>(run));
    const NetworkGraph graph = generate_topology(params.profile, derive_seed(base, 0));
    const FlowSet flows =
        generate_flows(graph, params.profile.flow_count, derive_seed(base, 1));

    GAConfig ga = params.ga;
    ga.weight_max = params.profile.weight_max;
    ga.rng_seed = derive_seed(base, 2);
    const OptimizationResult ga_result = optimize(graph, flows, ga);
    report.runs.push_back(RunRecord{report.experiment_id, "SDNGALB", params.profile.name,
                                    params.profile.flow_count, run, base, std::nullopt,
                                    ga_result.best_fitness, ga_result.elapsed_seconds,
                                    to_string(ga_result.stop_reason)});

    ACOConfig aco = params.aco;
    aco.rng_seed = derive_seed(base, 3);
    const BaselineResult aco_result = aco_optimize(graph, flows, aco);
    report.runs.push_back(RunRecord{report.experiment_id, "ACOLB", params.profile.name,
                                    params.profile.flow_count, run, base, std::nullopt,
                                    aco_result.max_load, aco_result.elapsed_seconds,
                                    std::string()});

    const BaselineResult dspa =
        dspa_route(graph, flows, params.profile.weight_max, derive_seed(base, 4));
    report.runs.push_back(RunRecord{report.experiment_id, "DSPA", params.profile.name,
                                    params.profile.flow_count, run, base, std::nullopt,
                                    dspa.max_load, dspa.elapsed_seconds, std::string()});
  }
  report.aggregates = compute_aggregates(report.runs);
  return report;
}

}  // namespace galb
