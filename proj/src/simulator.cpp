#include "retcache/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "retcache/rng.hpp"

namespace retcache {

SimResult simulate(const CachingPlan& plan, const Scenario& scenario,
                   const DemandMatrix& demand, const SimConfig& config) {
  scenario.validate();
  demand.validate();
  if (demand.num_contents() != scenario.num_contents ||
      demand.num_requesters() != scenario.num_requesters)
    throw std::domain_error("demand dimensions do not match the scenario");
  if (config.trials < 1) throw ValidationError("trials must be >= 1");
  const FeasibilityReport feasibility = check_feasibility(plan, scenario);
  if (!feasibility.feasible())
    throw std::domain_error("plan is infeasible: " +
                            feasibility.violations.front().describe());

  const int num_contents = scenario.num_contents;
  const int num_requesters = scenario.num_requesters;
  const int num_slots = scenario.num_slots;
  const double contacts_per_slot =
      scenario.contact_rate * scenario.slot_duration;
  const std::vector<double> miss = miss_table(scenario);

  // Inverse-CDF rows for the per-requester content draw.
  std::vector<double> cumulative(
      static_cast<size_t>(num_requesters) * num_contents);
  for (int r = 0; r < num_requesters; ++r) {
    double acc = 0;
    for (int c = 0; c < num_contents; ++c) {
      acc += demand.at(r, c);
      cumulative[static_cast<size_t>(r) * num_contents + c] = acc;
    }
  }

  double sum = 0;
  double sum_squares = 0;
  for (int trial = 0; trial < config.trials; ++trial) {
    std::mt19937_64 engine(substream_seed(config.seed, trial));
    int misses = 0;
    for (int t = 0; t < num_slots; ++t) {
      for (int r = 0; r < num_requesters; ++r) {
        const double u = uniform01(engine);
        const double* row =
            cumulative.data() + static_cast<size_t>(r) * num_contents;
        const int content = static_cast<int>(
            std::min<std::ptrdiff_t>(num_contents - 1,
                                     std::upper_bound(row, row + num_contents, u) - row));
        const int holders = plan.at(content, t);
        bool missed;
        if (config.model == ContactModel::Bernoulli) {
          missed = uniform01(engine) < miss[holders];
        } else {
          missed = poisson_sample(engine, holders * contacts_per_slot) == 0;
        }
        misses += missed;
      }
    }
    sum += misses;
    sum_squares += static_cast<double>(misses) * misses;
  }

  SimResult result;
  result.trials = config.trials;
  result.seed = config.seed;
  result.model =
      config.model == ContactModel::Bernoulli ? "bernoulli" : "poisson";
  result.generator = std::string(kGeneratorName);
  result.empirical_download_cost = sum / config.trials;
  if (config.trials > 1) {
    const double variance =
        std::max(0.0, (sum_squares - sum * sum / config.trials) /
                          (config.trials - 1));
    result.standard_error = std::sqrt(variance / config.trials);
  }

  const std::vector<double> popularity = demand.popularity();
  double analytic = 0;
  for (int c = 0; c < num_contents; ++c)
    for (int t = 0; t < num_slots; ++t)
      analytic += popularity[c] * miss[plan.at(c, t)];
  result.analytic_download_cost = analytic;
  result.z_score =
      result.standard_error > 0
          ? (result.empirical_download_cost - analytic) / result.standard_error
          : 0.0;
  return result;
}

}  // namespace retcache
