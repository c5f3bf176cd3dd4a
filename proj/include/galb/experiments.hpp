#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galb/baselines.hpp"
#include "galb/ga.hpp"
#include "galb/workbench.hpp"

namespace galb {

// One executed run inside an experiment. Fields that do not apply to the
// experiment stay empty in the CSV.
struct RunRecord {
  std::string experiment;
  std::string algorithm;
  std::string profile;
  int flow_count = 0;
  int run_index = 0;
  std::uint64_t seed = 0;
  std::optional<Load> before_max_load;  // load under the initial random draw
  Load max_load = 0;                    // load after the algorithm ran
  double elapsed_seconds = 0.0;
  std::string stop_reason;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// Means over the runs sharing (algorithm, profile, flow_count).
// effectiveness_pct = round(100 * (1 - mean_after / mean_before)), absent
// when no before-value exists or it is zero.
struct AggregateRow {
  std::string experiment;
  std::string algorithm;
  std::string profile;
  int flow_count = 0;
  int runs = 0;
  std::optional<double> mean_before;
  double mean_max_load = 0.0;
  double mean_elapsed_seconds = 0.0;
  std::optional<int> effectiveness_pct;

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

struct ExperimentReport {
  std::string experiment_id;
  std::vector<RunRecord> runs;
  std::vector<AggregateRow> aggregates;

  // Header + one row per run + one row per aggregate. Byte-stable across
  // re-runs with the same master seed except the elapsed_s column.
  std::string to_csv() const;
};

inline constexpr char kCsvHeader[] =
    "kind,experiment,algorithm,profile,flows,run,seed,before_max_load,max_load,"
    "effectiveness_pct,elapsed_s,stop_reason";

// Aggregates grouped by (algorithm, profile, flow_count) in first-seen
// order of the run records.
std::vector<AggregateRow> compute_aggregates(const std::vector<RunRecord>& runs);

std::optional<int> effectiveness_pct(double mean_before, double mean_after);

// Seed fan-out (see README "Reproducibility"): every run derives its seeds
// from the master via derive_seed chains, so any experiment replays
// byte-identically for a fixed master seed.

struct EffectivenessParams {
  TopologyProfile profile;
  std::vector<int> flow_counts;
  int runs = 10;
  GAConfig ga;
  std::uint64_t master_seed = 1;
};

// Fixed topology per profile; flows redrawn per run. before = one random
// weight draw, after = the GA optimum on the same instance.
ExperimentReport run_effectiveness(const EffectivenessParams& params);

struct TimingParams {
  std::vector<TopologyProfile> profiles;
  int runs = 10;
  GAConfig ga;
  std::uint64_t master_seed = 1;
};

// Fixed topology per profile; flows redrawn per run; records GA solve time.
ExperimentReport run_timing(const TimingParams& params);

struct CompareParams {
  TopologyProfile profile;
  int runs = 100;
  GAConfig ga;
  ACOConfig aco;
  std::uint64_t master_seed = 1;
};

// Fresh instance (topology + flows) per run; SDNGALB, ACOLB, and DSPA all
// solve the identical instance.
ExperimentReport run_compare(const CompareParams& params);

}  // namespace galb
