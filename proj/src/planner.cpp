#include "retcache/planner.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace retcache {

double DpTables::cost_at(int content, int cap) const {
  if (content < 0 || content >= num_contents || cap < 0 || cap > capacity)
    throw std::domain_error("dp table index out of range");
  return best_cost[static_cast<size_t>(content) * (capacity + 1) + cap];
}

int DpTables::choice_at(int content, int cap) const {
  if (content < 0 || content >= num_contents || cap < 0 || cap > capacity)
    throw std::domain_error("dp table index out of range");
  return best_choice[static_cast<size_t>(content) * (capacity + 1) + cap];
}

std::string_view tie_break_policy() {
  return "cost ties pick the smaller helper count; contents are scanned in "
         "ascending index order; repeated solves on identical input produce "
         "identical plans";
}

PlanResult solve(const ZTable& z, const Scenario& scenario) {
  scenario.validate();
  if (z.num_contents() != scenario.num_contents ||
      z.num_helpers() != scenario.num_helpers ||
      z.num_slots() != scenario.num_slots)
    throw std::domain_error("z-table dimensions do not match the scenario");

  const int num_contents = scenario.num_contents;
  const int capacity = scenario.total_capacity;
  const int max_count = scenario.num_helpers;

  PlanResult result;
  DpTables& dp = result.tables;
  dp.num_contents = num_contents;
  dp.capacity = capacity;
  dp.best_cost.assign(static_cast<size_t>(num_contents) * (capacity + 1),
                      std::numeric_limits<double>::quiet_NaN());
  dp.best_choice.assign(static_cast<size_t>(num_contents) * (capacity + 1),
                        -1);
  auto cost_cell = [&](int k, int i) -> double& {
    return dp.best_cost[static_cast<size_t>(k) * (capacity + 1) + i];
  };
  auto choice_cell = [&](int k, int i) -> int& {
    return dp.best_choice[static_cast<size_t>(k) * (capacity + 1) + i];
  };

  for (int i = 0; i <= capacity; ++i) {
    const int cap = std::min(i, max_count);
    double best = z.cost(0, 0);
    int best_x = 0;
    for (int x = 1; x <= cap; ++x)
      if (z.cost(0, x) < best) {
        best = z.cost(0, x);
        best_x = x;
      }
    cost_cell(0, i) = best;
    choice_cell(0, i) = best_x;
  }

  // Intermediate contents need the full capacity range for backtracking;
  // the last content is only ever asked at full capacity.
  for (int k = 1; k < num_contents; ++k) {
    const int first_i = (k == num_contents - 1) ? capacity : 0;
    for (int i = first_i; i <= capacity; ++i) {
      const int cap = std::min(i, max_count);
      double best = std::numeric_limits<double>::infinity();
      int best_x = 0;
      for (int x = 0; x <= cap; ++x) {
        const double v = z.cost(k, x) + cost_cell(k - 1, i - x);
        if (v < best) {
          best = v;
          best_x = x;
        }
      }
      cost_cell(k, i) = best;
      choice_cell(k, i) = best_x;
    }
  }

  result.dp_objective = cost_cell(num_contents - 1, capacity);

  result.initial_counts.assign(num_contents, 0);
  int remaining = capacity;
  result.initial_counts[num_contents - 1] = choice_cell(num_contents - 1, capacity);
  remaining -= result.initial_counts[num_contents - 1];
  for (int k = num_contents - 2; k >= 0; --k) {
    if (remaining < 0)
      throw std::logic_error("dp backtracking drove capacity negative");
    result.initial_counts[k] = choice_cell(k, remaining);
    remaining -= result.initial_counts[k];
  }
  if (remaining < 0)
    throw std::logic_error("dp backtracking drove capacity negative");

  result.plan = CachingPlan(num_contents, scenario.num_slots);
  for (int c = 0; c < num_contents; ++c)
    result.plan.set_row(c, z.schedule(c, result.initial_counts[c]));

  result.cost = plan_cost_from_popularity(result.plan, scenario, z.popularity());
  if (std::abs(result.cost.total() - result.dp_objective) >
      1e-6 * std::max(1.0, std::abs(result.dp_objective)))
    throw std::logic_error(
        "expanded plan cost disagrees with the dp objective");

  const FeasibilityReport feasibility = check_feasibility(result.plan, scenario);
  if (!feasibility.feasible())
    throw std::logic_error("planner produced an infeasible plan: " +
                           feasibility.violations.front().describe());

  return result;
}

}  // namespace retcache
