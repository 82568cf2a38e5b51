#include "retcache/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "retcache/baselines.hpp"

namespace retcache {

using nlohmann::json;
using nlohmann::ordered_json;

DemandMatrix zipf_demand(int num_contents, double gamma, int num_requesters) {
  if (num_contents < 1) throw std::domain_error("num_contents must be >= 1");
  if (num_requesters < 1) throw std::domain_error("num_requesters must be >= 1");
  if (!(gamma >= 0)) throw std::domain_error("zipf shape must be >= 0");

  std::vector<double> row(num_contents);
  double normalizer = 0;
  for (int c = 0; c < num_contents; ++c) {
    row[c] = std::pow(static_cast<double>(c + 1), -gamma);
    normalizer += row[c];
  }
  for (double& w : row) w /= normalizer;

  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(num_requesters) * num_contents);
  for (int r = 0; r < num_requesters; ++r)
    entries.insert(entries.end(), row.begin(), row.end());
  return DemandMatrix(num_requesters, num_contents, std::move(entries));
}

DemandMatrix ScenarioConfig::make_demand() const {
  if (demand.kind == DemandSpec::Kind::Zipf)
    return zipf_demand(scenario.num_contents, demand.zipf_gamma,
                       scenario.num_requesters);
  DemandMatrix dm = DemandMatrix::from_rows(demand.matrix);
  if (dm.num_requesters() != scenario.num_requesters ||
      dm.num_contents() != scenario.num_contents)
    throw ValidationError("demand matrix dimensions do not match the scenario");
  dm.validate();
  return dm;
}

ScenarioConfig default_config() {
  ScenarioConfig cfg;
  cfg.scenario = make_scenario(/*num_contents=*/100, /*num_requesters=*/10,
                               /*num_helpers=*/12, /*cache_size_per_helper=*/4,
                               /*num_slots=*/24, /*slot_duration=*/1.0,
                               /*contact_rate=*/1.0, /*storage_weight=*/1e-4);
  cfg.demand.kind = DemandSpec::Kind::Zipf;
  cfg.demand.zipf_gamma = 1.0;
  return cfg;
}

namespace {

const char* const kKnownSweepParams = "H, s, alpha, gamma, lambda, delta, T, C, R";

bool known_sweep_param(const std::string& p) {
  return p == "H" || p == "s" || p == "alpha" || p == "gamma" ||
         p == "lambda" || p == "delta" || p == "T" || p == "C" || p == "R";
}

int require_positive_int(const json& v, const char* field) {
  if (!v.is_number_integer() || v.get<long long>() < 1 ||
      v.get<long long>() > std::numeric_limits<int>::max())
    throw ValidationError(std::string("field '") + field +
                          "': expected a positive integer");
  return v.get<int>();
}

double require_number(const json& v, const char* field) {
  if (!v.is_number())
    throw ValidationError(std::string("field '") + field +
                          "': expected a number");
  return v.get<double>();
}

StorageCostFn parse_storage_cost(const json& v) {
  if (v.is_string()) return StorageCostFn::from_name(v.get<std::string>());
  if (v.is_object() && v.size() == 1 && v.contains("table")) {
    const json& table = v.at("table");
    if (!table.is_array())
      throw ValidationError("field 'storage_cost.table': expected an array");
    std::vector<double> values;
    values.reserve(table.size());
    for (const json& item : table) {
      if (!item.is_number())
        throw ValidationError("field 'storage_cost.table': entries must be numbers");
      values.push_back(item.get<double>());
    }
    return StorageCostFn::table(std::move(values));
  }
  throw ValidationError(
      "field 'storage_cost': expected a builtin name or {\"table\": [...]}");
}

DemandSpec parse_demand(const json& v) {
  if (!v.is_object() || v.size() != 1 ||
      !(v.contains("zipf") || v.contains("matrix")))
    throw ValidationError(
        "field 'demand': expected exactly one of {\"zipf\": {...}} or "
        "{\"matrix\": [...]}");
  DemandSpec spec;
  if (v.contains("zipf")) {
    const json& zipf = v.at("zipf");
    if (!zipf.is_object())
      throw ValidationError("field 'demand.zipf': expected an object");
    spec.kind = DemandSpec::Kind::Zipf;
    for (const auto& [key, value] : zipf.items()) {
      if (key == "gamma") {
        spec.zipf_gamma = require_number(value, "demand.zipf.gamma");
        if (!(spec.zipf_gamma >= 0))
          throw ValidationError("field 'demand.zipf.gamma': must be >= 0");
      } else {
        throw ValidationError("unknown field 'demand.zipf." + key + "'");
      }
    }
  } else {
    const json& matrix = v.at("matrix");
    if (!matrix.is_array() || matrix.empty())
      throw ValidationError("field 'demand.matrix': expected a nonempty array of rows");
    spec.kind = DemandSpec::Kind::Matrix;
    for (const json& row : matrix) {
      if (!row.is_array())
        throw ValidationError("field 'demand.matrix': rows must be arrays");
      std::vector<double> values;
      values.reserve(row.size());
      for (const json& item : row) {
        if (!item.is_number())
          throw ValidationError("field 'demand.matrix': entries must be numbers");
        values.push_back(item.get<double>());
      }
      spec.matrix.push_back(std::move(values));
    }
  }
  return spec;
}

SweepSpec parse_sweep(const json& v) {
  if (!v.is_object())
    throw ValidationError("field 'sweep': expected an object");
  SweepSpec spec;
  bool have_param = false, have_values = false;
  for (const auto& [key, value] : v.items()) {
    if (key == "param") {
      if (!value.is_string())
        throw ValidationError("field 'sweep.param': expected a string");
      spec.param = value.get<std::string>();
      have_param = true;
    } else if (key == "values") {
      if (!value.is_array() || value.empty())
        throw ValidationError("field 'sweep.values': expected a nonempty array");
      for (const json& item : value)
        spec.values.push_back(require_number(item, "sweep.values"));
      have_values = true;
    } else {
      throw ValidationError("unknown field 'sweep." + key + "'");
    }
  }
  if (!have_param || !have_values)
    throw ValidationError("field 'sweep': needs both 'param' and 'values'");
  if (!known_sweep_param(spec.param))
    throw ValidationError("field 'sweep.param': unknown parameter '" +
                          spec.param + "' (expected one of " +
                          kKnownSweepParams + ")");
  return spec;
}

}  // namespace

ScenarioConfig load_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object())
    throw ParseError("config root must be a JSON object");

  ScenarioConfig cfg = default_config();
  Scenario& sc = cfg.scenario;
  bool have_requesters = false, have_contents = false, have_capacity = false;
  int explicit_capacity = 0;

  for (const auto& [key, value] : j.items()) {
    if (key == "num_contents") {
      sc.num_contents = require_positive_int(value, "num_contents");
      have_contents = true;
    } else if (key == "num_requesters") {
      sc.num_requesters = require_positive_int(value, "num_requesters");
      have_requesters = true;
    } else if (key == "num_helpers") {
      sc.num_helpers = require_positive_int(value, "num_helpers");
    } else if (key == "cache_size_per_helper") {
      sc.cache_size_per_helper = require_positive_int(value, "cache_size_per_helper");
    } else if (key == "total_capacity") {
      explicit_capacity = require_positive_int(value, "total_capacity");
      have_capacity = true;
    } else if (key == "num_slots") {
      sc.num_slots = require_positive_int(value, "num_slots");
    } else if (key == "slot_duration") {
      sc.slot_duration = require_number(value, "slot_duration");
    } else if (key == "contact_rate") {
      sc.contact_rate = require_number(value, "contact_rate");
    } else if (key == "storage_weight") {
      sc.storage_weight = require_number(value, "storage_weight");
    } else if (key == "storage_cost") {
      sc.storage_cost_fn = parse_storage_cost(value);
    } else if (key == "demand") {
      cfg.demand = parse_demand(value);
    } else if (key == "sweep") {
      cfg.sweep = parse_sweep(value);
    } else if (key == "generator") {
      if (!value.is_string() || value.get<std::string>() != kGeneratorName)
        throw ValidationError(std::string("field 'generator': only '") +
                              std::string(kGeneratorName) + "' is supported");
      cfg.generator = value.get<std::string>();
    } else {
      throw ValidationError("unknown config field '" + key + "'");
    }
  }

  if (cfg.demand.kind == DemandSpec::Kind::Matrix) {
    const int rows = static_cast<int>(cfg.demand.matrix.size());
    const int cols = static_cast<int>(cfg.demand.matrix.front().size());
    if (have_requesters && sc.num_requesters != rows)
      throw ValidationError("num_requesters disagrees with the demand matrix rows");
    if (have_contents && sc.num_contents != cols)
      throw ValidationError("num_contents disagrees with the demand matrix columns");
    sc.num_requesters = rows;
    sc.num_contents = cols;
  }

  sc.total_capacity = sc.cache_size_per_helper * sc.num_helpers;
  if (have_capacity && explicit_capacity != sc.total_capacity)
    throw ValidationError(
        "total_capacity must equal cache_size_per_helper * num_helpers");

  sc.validate();
  if (cfg.demand.kind == DemandSpec::Kind::Matrix)
    cfg.make_demand();  // row sums and ranges checked at load time
  return cfg;
}

namespace {

ordered_json storage_cost_to_json(const StorageCostFn& fn) {
  if (fn.kind() == StorageCostFn::Kind::Table)
    return ordered_json{{"table", fn.values()}};
  return ordered_json(fn.name());
}

ordered_json demand_to_json(const DemandSpec& demand) {
  if (demand.kind == DemandSpec::Kind::Zipf)
    return ordered_json{{"zipf", {{"gamma", demand.zipf_gamma}}}};
  return ordered_json{{"matrix", demand.matrix}};
}

ordered_json config_to_json(const ScenarioConfig& cfg) {
  ordered_json j;
  j["num_contents"] = cfg.scenario.num_contents;
  j["num_requesters"] = cfg.scenario.num_requesters;
  j["num_helpers"] = cfg.scenario.num_helpers;
  j["cache_size_per_helper"] = cfg.scenario.cache_size_per_helper;
  j["total_capacity"] = cfg.scenario.total_capacity;
  j["num_slots"] = cfg.scenario.num_slots;
  j["slot_duration"] = cfg.scenario.slot_duration;
  j["contact_rate"] = cfg.scenario.contact_rate;
  j["storage_weight"] = cfg.scenario.storage_weight;
  j["storage_cost"] = storage_cost_to_json(cfg.scenario.storage_cost_fn);
  j["demand"] = demand_to_json(cfg.demand);
  j["generator"] = cfg.generator;
  if (cfg.sweep)
    j["sweep"] = {{"param", cfg.sweep->param}, {"values", cfg.sweep->values}};
  return j;
}

}  // namespace

std::string emit_config(const ScenarioConfig& config) {
  return config_to_json(config).dump(2) + "\n";
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& config,
                                 const std::string& param, double value) {
  auto as_positive_int = [&](const char* name) {
    if (!(value >= 1) || value != std::floor(value) ||
        value > std::numeric_limits<int>::max())
      throw ValidationError(std::string("sweep value for ") + name +
                            " must be a positive integer");
    return static_cast<int>(value);
  };
  auto require_zipf = [&]() {
    if (config.demand.kind != DemandSpec::Kind::Zipf)
      throw ValidationError("sweeping " + param +
                            " requires zipf demand, not an explicit matrix");
  };

  ScenarioConfig out = config;
  if (param == "H") {
    out.scenario.num_helpers = as_positive_int("H");
  } else if (param == "s") {
    out.scenario.cache_size_per_helper = as_positive_int("s");
  } else if (param == "alpha") {
    if (!(value >= 0))
      throw ValidationError("sweep value for alpha must be >= 0");
    out.scenario.storage_weight = value;
  } else if (param == "gamma") {
    require_zipf();
    if (!(value >= 0))
      throw ValidationError("sweep value for gamma must be >= 0");
    out.demand.zipf_gamma = value;
  } else if (param == "lambda") {
    if (!(value > 0))
      throw ValidationError("sweep value for lambda must be > 0");
    out.scenario.contact_rate = value;
  } else if (param == "delta") {
    if (!(value > 0))
      throw ValidationError("sweep value for delta must be > 0");
    out.scenario.slot_duration = value;
  } else if (param == "T") {
    out.scenario.num_slots = as_positive_int("T");
  } else if (param == "C") {
    require_zipf();
    out.scenario.num_contents = as_positive_int("C");
  } else if (param == "R") {
    require_zipf();
    out.scenario.num_requesters = as_positive_int("R");
  } else {
    throw ValidationError("unknown sweep parameter '" + param +
                          "' (expected one of " + kKnownSweepParams + ")");
  }
  out.scenario.total_capacity =
      out.scenario.cache_size_per_helper * out.scenario.num_helpers;
  out.scenario.validate();
  return out;
}

namespace {

std::string format_real(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

ordered_json sim_to_json(const SimResult& sim) {
  ordered_json j;
  j["trials"] = sim.trials;
  j["seed"] = sim.seed;
  j["model"] = sim.model;
  j["generator"] = sim.generator;
  j["empirical_download_cost"] = sim.empirical_download_cost;
  j["standard_error"] = sim.standard_error;
  j["analytic_download_cost"] = sim.analytic_download_cost;
  j["z_score"] = sim.z_score;
  return j;
}

}  // namespace

std::string emit_report(const PlanReport& report, bool include_timing) {
  ordered_json j;
  j["planner"] = report.planner;
  j["total_cost"] = report.cost.total();
  j["download_cost"] = report.cost.download;
  j["storage_cost"] = report.cost.storage;
  j["initial_counts"] = report.initial_counts;

  std::vector<std::vector<int>> rows;
  rows.reserve(report.plan.num_contents());
  for (int c = 0; c < report.plan.num_contents(); ++c) {
    const auto row = report.plan.row(c);
    rows.emplace_back(row.begin(), row.end());
  }
  j["plan"] = rows;

  if (report.seed) {
    j["rng"] = {{"generator", report.config.generator}, {"seed", *report.seed}};
  }
  if (report.sim) j["sim"] = sim_to_json(*report.sim);
  if (report.oracle) {
    j["oracle"] = {{"dp_cost", report.oracle->dp_cost},
                   {"oracle_cost", report.oracle->oracle_cost},
                   {"match", report.oracle->match},
                   {"search_space_log10", report.oracle->search_space_log10}};
  }
  if (include_timing) j["timing_seconds"] = report.timing_seconds;
  j["scenario"] = config_to_json(report.config);
  return j.dump(2) + "\n";
}

std::string emit_sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  for (const SweepRow& row : rows) {
    out << row.param << ',' << format_real(row.value) << ','
        << format_real(row.dp_cost) << ',' << format_real(row.popular_cost)
        << ',' << format_real(row.random_cost_mean) << ','
        << format_real(row.random_cost_stderr) << ','
        << format_real(row.download_cost_dp) << ','
        << format_real(row.storage_cost_dp) << "\n";
  }
  return out.str();
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& base,
                                const std::string& param,
                                const std::vector<double>& values,
                                int num_seeds, std::uint64_t seed_base) {
  if (values.empty()) throw ValidationError("sweep needs at least one value");
  if (num_seeds < 1) throw ValidationError("sweep needs at least one seed");

  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (double value : values) {
    const ScenarioConfig cfg = apply_sweep_value(base, param, value);
    const DemandMatrix demand = cfg.make_demand();
    const ZTable z = build_z_table(cfg.scenario, demand);
    const PlanResult dp = solve(z, cfg.scenario);

    const CachingPlan popular = popular_plan(z, cfg.scenario, demand);
    const double popular_cost =
        plan_cost_from_popularity(popular, cfg.scenario, z.popularity()).total();

    double sum = 0, sum_squares = 0;
    for (int i = 0; i < num_seeds; ++i) {
      const CachingPlan random =
          random_plan(z, cfg.scenario, demand, seed_base + i);
      const double cost =
          plan_cost_from_popularity(random, cfg.scenario, z.popularity()).total();
      sum += cost;
      sum_squares += cost * cost;
    }
    const double mean = sum / num_seeds;
    double stderr_mean = 0;
    if (num_seeds > 1) {
      const double variance = std::max(
          0.0, (sum_squares - sum * sum / num_seeds) / (num_seeds - 1));
      stderr_mean = std::sqrt(variance / num_seeds);
    }

    rows.push_back({param, value, dp.cost.total(), popular_cost, mean,
                    stderr_mean, dp.cost.download, dp.cost.storage});
  }
  return rows;
}

}  // namespace retcache
