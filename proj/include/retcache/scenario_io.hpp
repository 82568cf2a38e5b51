#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retcache/model.hpp"
#include "retcache/planner.hpp"
#include "retcache/rng.hpp"
#include "retcache/simulator.hpp"

namespace retcache {

struct DemandSpec {
  enum class Kind { Zipf, Matrix };
  Kind kind = Kind::Zipf;
  double zipf_gamma = 1.0;
  std::vector<std::vector<double>> matrix;  // R rows by C columns

  bool operator==(const DemandSpec&) const = default;
};

struct SweepSpec {
  std::string param;  // one of H, s, alpha, gamma, lambda, delta, T, C, R
  std::vector<double> values;

  bool operator==(const SweepSpec&) const = default;
};

struct ScenarioConfig {
  Scenario scenario;
  DemandSpec demand;
  std::optional<SweepSpec> sweep;
  std::string generator{kGeneratorName};

  DemandMatrix make_demand() const;

  bool operator==(const ScenarioConfig&) const = default;
};

// Identical rows w_c = c^(-gamma) / sum_k k^(-gamma), ranks 1-based.
DemandMatrix zipf_demand(int num_contents, double gamma, int num_requesters);

// The built-in default parameter set: C=100, R=10, H=12, s=4, T=24,
// delta=1, lambda=1, alpha=1e-4, quadratic storage price, Zipf gamma=1.
ScenarioConfig default_config();

// Parses the JSON config text. Missing fields take the defaults above;
// unknown fields, type errors and invariant violations are rejected with
// the offending field named.
ScenarioConfig load_config(const std::string& text);
std::string emit_config(const ScenarioConfig& config);

// Returns a copy with one parameter replaced and derived fields rebuilt.
// gamma/C/R sweeps require Zipf demand.
ScenarioConfig apply_sweep_value(const ScenarioConfig& config,
                                 const std::string& param, double value);

struct OracleVerdict {
  double dp_cost = 0;
  double oracle_cost = 0;
  bool match = false;
  double search_space_log10 = 0;
};

struct PlanReport {
  std::string planner;  // "dp" | "popular" | "random"
  CostBreakdown cost;
  CachingPlan plan;
  std::vector<int> initial_counts;
  ScenarioConfig config;
  double timing_seconds = 0;  // volatile; serialized only on request so
                              // repeated runs emit identical bytes
  std::optional<std::uint64_t> seed;
  std::optional<SimResult> sim;
  std::optional<OracleVerdict> oracle;
};

std::string emit_report(const PlanReport& report, bool include_timing = false);

inline constexpr std::string_view kSweepCsvHeader =
    "sweep_param,sweep_value,dp_cost,popular_cost,random_cost_mean,"
    "random_cost_stderr,download_cost_dp,storage_cost_dp";

struct SweepRow {
  std::string param;
  double value = 0;
  double dp_cost = 0;
  double popular_cost = 0;
  double random_cost_mean = 0;
  double random_cost_stderr = 0;
  double download_cost_dp = 0;
  double storage_cost_dp = 0;
};

// Reals rendered with %.17g so parsing the CSV back recovers exact values.
std::string emit_sweep_csv(const std::vector<SweepRow>& rows);

// One row per value: optimal plan, popular baseline, and the random
// baseline averaged over seeds seed_base .. seed_base+num_seeds-1.
std::vector<SweepRow> run_sweep(const ScenarioConfig& base,
                                const std::string& param,
                                const std::vector<double>& values,
                                int num_seeds, std::uint64_t seed_base);

}  // namespace retcache
