#include "retcache/oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace retcache {

double global_search_space_log10(const Scenario& scenario) {
  return static_cast<double>(scenario.num_contents) * scenario.num_slots *
         std::log10(static_cast<double>(scenario.num_helpers + 1));
}

OracleResult brute_force_global(const Scenario& scenario,
                                const DemandMatrix& demand, PlanShape shape) {
  scenario.validate();
  demand.validate();
  if (demand.num_contents() != scenario.num_contents ||
      demand.num_requesters() != scenario.num_requesters)
    throw std::domain_error("demand dimensions do not match the scenario");

  const double log10_space = global_search_space_log10(scenario);
  if (log10_space > 7.0) {
    std::ostringstream msg;
    msg << "brute-force search space (H+1)^(C*T) = "
        << scenario.num_helpers + 1 << "^"
        << scenario.num_contents * scenario.num_slots << " ~ 10^"
        << log10_space << " exceeds the 1e7 guard";
    throw SizeGuardError(msg.str(), log10_space);
  }

  const int num_contents = scenario.num_contents;
  const int num_slots = scenario.num_slots;
  const int max_count = scenario.num_helpers;
  const int cells = num_contents * num_slots;
  const std::vector<double> popularity = demand.popularity();

  std::vector<int> x(cells, 0);
  std::vector<int> best_x;
  double best = std::numeric_limits<double>::infinity();

  // Odometer over all candidate matrices in ascending lexicographic order
  // (row-major), so the first strict improvement also fixes the reported
  // minimizer under ties.
  while (true) {
    bool feasible = true;
    for (int t = 0; t < num_slots && feasible; ++t) {
      int stored = 0;
      for (int c = 0; c < num_contents; ++c) stored += x[c * num_slots + t];
      feasible = stored <= scenario.total_capacity;
    }
    if (feasible && shape == PlanShape::NonincreasingRows) {
      for (int c = 0; c < num_contents && feasible; ++c)
        for (int t = 1; t < num_slots && feasible; ++t)
          feasible = x[c * num_slots + t] <= x[c * num_slots + t - 1];
    }
    if (feasible) {
      const double cost =
          plan_cost_from_popularity(x, num_contents, num_slots, scenario,
                                    popularity)
              .total();
      if (cost < best) {
        best = cost;
        best_x = x;
      }
    }
    int pos = cells - 1;
    while (pos >= 0 && ++x[pos] > max_count) {
      x[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  return {CachingPlan(num_contents, num_slots, std::move(best_x)), best};
}

RetentionSchedule brute_force_schedules(int content, int initial,
                                        const Scenario& scenario,
                                        const DemandMatrix& demand) {
  scenario.validate();
  if (demand.num_contents() != scenario.num_contents ||
      demand.num_requesters() != scenario.num_requesters)
    throw std::domain_error("demand dimensions do not match the scenario");
  if (content < 0 || content >= scenario.num_contents)
    throw std::domain_error("content index out of range");
  if (initial < 0 || initial > scenario.num_helpers)
    throw std::domain_error("initial helper count outside [0, H]");

  const int num_slots = scenario.num_slots;
  // Nonincreasing sequences of length T-1 capped at `initial`:
  // binom(initial + T - 1, T - 1) of them.
  double count = 1;
  for (int j = 1; j <= num_slots - 1; ++j)
    count *= static_cast<double>(initial + j) / j;
  if (count > 1e6) {
    std::ostringstream msg;
    msg << "schedule enumeration would visit ~" << count
        << " sequences, beyond the 1e6 guard";
    throw SizeGuardError(msg.str(), std::log10(count));
  }

  double popularity = 0;
  for (int r = 0; r < demand.num_requesters(); ++r)
    popularity += demand.at(r, content);
  const std::vector<double> miss = miss_table(scenario);
  std::vector<double> slot_price(num_slots);
  for (int t = 0; t < num_slots; ++t)
    slot_price[t] =
        scenario.storage_weight * scenario.storage_cost_fn(t + 1);

  RetentionSchedule best;
  best.cost = std::numeric_limits<double>::infinity();
  std::vector<int> current(num_slots, 0);
  current[0] = initial;
  const double first_cost = popularity * miss[initial] + slot_price[0] * initial;

  // Depth-first with counts ascending at each slot: lexicographic order,
  // first strict minimum wins ties.
  auto descend = [&](auto&& self, int t, double partial) -> void {
    if (t == num_slots) {
      if (partial < best.cost) {
        best.cost = partial;
        best.counts = current;
      }
      return;
    }
    for (int x = 0; x <= current[t - 1]; ++x) {
      current[t] = x;
      self(self, t + 1, partial + popularity * miss[x] + slot_price[t] * x);
    }
  };
  descend(descend, 1, first_cost);
  return best;
}

}  // namespace retcache
