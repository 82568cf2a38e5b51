#pragma once

#include "retcache/model.hpp"
#include "retcache/retention.hpp"

namespace retcache {

enum class PlanShape { Unrestricted, NonincreasingRows };

struct OracleResult {
  CachingPlan plan;
  double cost = 0;
};

// log10 of the candidate count (H+1)^(C*T).
double global_search_space_log10(const Scenario& scenario);

// Enumerates every integer matrix with entries in {0..H} and per-slot
// column sums within capacity — no structural shortcuts — and returns a
// minimizer with its cost. Ties go to the lexicographically smallest plan
// (row-major). Refuses when (H+1)^(C*T) exceeds 1e7.
//
// Deliberately unsophisticated: this is the trust anchor the planner is
// checked against.
OracleResult brute_force_global(const Scenario& scenario,
                                const DemandMatrix& demand,
                                PlanShape shape = PlanShape::Unrestricted);

// Enumerates every nonincreasing schedule with the given first element and
// returns a minimizer. Refuses beyond 1e6 candidate sequences.
RetentionSchedule brute_force_schedules(int content, int initial,
                                        const Scenario& scenario,
                                        const DemandMatrix& demand);

}  // namespace retcache
