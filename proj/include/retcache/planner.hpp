#pragma once

#include <string_view>
#include <vector>

#include "retcache/retention.hpp"

namespace retcache {

// Dynamic-programming tables over (content, capacity). Rows for contents
// before the last are filled for every capacity 0..S; the last content is
// only evaluated at full capacity, so its other cells stay NaN / -1.
struct DpTables {
  int num_contents = 0;
  int capacity = 0;
  std::vector<double> best_cost;  // C x (S+1)
  std::vector<int> best_choice;   // C x (S+1)

  double cost_at(int content, int cap) const;
  int choice_at(int content, int cap) const;
};

struct PlanResult {
  CachingPlan plan;
  std::vector<int> initial_counts;  // first-slot helper count per content
  CostBreakdown cost;
  double dp_objective = 0;  // table value at (C, S); equals cost.total()
                            // up to floating reassociation
  DpTables tables;
};

// Allocates initial helper counts across contents under the aggregate
// capacity by dynamic programming over the z-table, then backtracks and
// expands each content's stored retention schedule into the plan.
// The result is the global optimum over all feasible plans.
PlanResult solve(const ZTable& z, const Scenario& scenario);

// The deterministic ordering all argmin scans follow.
std::string_view tie_break_policy();

}  // namespace retcache
