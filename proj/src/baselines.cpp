#include "retcache/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "retcache/rng.hpp"

namespace retcache {

namespace {

void check_inputs(const ZTable& z, const Scenario& sc,
                  const DemandMatrix& demand) {
  sc.validate();
  if (z.num_contents() != sc.num_contents ||
      z.num_helpers() != sc.num_helpers || z.num_slots() != sc.num_slots)
    throw std::domain_error("z-table dimensions do not match the scenario");
  if (demand.num_contents() != sc.num_contents ||
      demand.num_requesters() != sc.num_requesters)
    throw std::domain_error("demand dimensions do not match the scenario");
}

// Shared allocation pass: each content in turn takes the initial count
// with the cheapest z-row cost under the capacity still available.
CachingPlan allocate_in_order(const std::vector<int>& order, const ZTable& z,
                              const Scenario& sc) {
  CachingPlan plan(sc.num_contents, sc.num_slots);
  int remaining = sc.total_capacity;
  for (int c : order) {
    const int cap = std::min(remaining, sc.num_helpers);
    int best_x = 0;
    double best = z.cost(c, 0);
    for (int x = 1; x <= cap; ++x)
      if (z.cost(c, x) < best) {
        best = z.cost(c, x);
        best_x = x;
      }
    plan.set_row(c, z.schedule(c, best_x));
    remaining -= best_x;
  }
  return plan;
}

}  // namespace

CachingPlan popular_plan(const ZTable& z, const Scenario& scenario,
                         const DemandMatrix& demand) {
  check_inputs(z, scenario, demand);
  const std::vector<double> popularity = demand.popularity();
  std::vector<int> order(scenario.num_contents);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (popularity[a] != popularity[b]) return popularity[a] > popularity[b];
    return a < b;
  });
  return allocate_in_order(order, z, scenario);
}

CachingPlan random_plan(const ZTable& z, const Scenario& scenario,
                        const DemandMatrix& demand, std::uint64_t seed) {
  check_inputs(z, scenario, demand);
  const std::vector<double> popularity = demand.popularity();
  std::vector<int> pool(scenario.num_contents);
  std::iota(pool.begin(), pool.end(), 0);

  std::mt19937_64 engine(seed);
  std::vector<int> order;
  order.reserve(pool.size());
  while (!pool.empty()) {
    double remaining_weight = 0;
    for (int c : pool) remaining_weight += popularity[c];
    size_t picked = 0;
    if (remaining_weight > 0) {
      const double target = uniform01(engine) * remaining_weight;
      double cumulative = 0;
      picked = pool.size() - 1;
      for (size_t i = 0; i < pool.size(); ++i) {
        cumulative += popularity[pool[i]];
        if (target < cumulative) {
          picked = i;
          break;
        }
      }
    }
    order.push_back(pool[picked]);
    pool.erase(pool.begin() + picked);
  }
  return allocate_in_order(order, z, scenario);
}

}  // namespace retcache
