#pragma once

#include <random>
#include <vector>

#include "retcache/model.hpp"

namespace retcache::test {

inline double urand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (static_cast<double>(rng() >> 11) * 0x1.0p-53) * (hi - lo);
}

inline int irand(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Rows of independent positives, normalized to distributions.
inline DemandMatrix random_demand(std::mt19937_64& rng, int num_requesters,
                                  int num_contents) {
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(num_requesters) * num_contents);
  for (int r = 0; r < num_requesters; ++r) {
    std::vector<double> row(num_contents);
    double sum = 0;
    for (double& w : row) {
      w = urand(rng, 0.05, 1.0);
      sum += w;
    }
    for (double& w : row) entries.push_back(w / sum);
  }
  return DemandMatrix(num_requesters, num_contents, std::move(entries));
}

// Strictly increasing storage price table of the given length.
inline StorageCostFn random_increasing_table(std::mt19937_64& rng, int length) {
  std::vector<double> values(length);
  double acc = urand(rng, 0.1, 1.0);
  for (double& v : values) {
    v = acc;
    acc += urand(rng, 0.05, 1.0);
  }
  return StorageCostFn::table(std::move(values));
}

// Random small scenario; storage weight mixes zero, mild and punishing
// levels so optima land on interior, boundary and all-zero plans.
inline Scenario random_small_scenario(std::mt19937_64& rng, int num_contents,
                                      int num_requesters, int num_helpers,
                                      int cache_size, int num_slots) {
  const double pick = urand(rng, 0.0, 1.0);
  double alpha = 0.0;
  if (pick > 0.85)
    alpha = urand(rng, 0.5, 3.0);
  else if (pick > 0.15)
    alpha = urand(rng, 0.001, 0.3);
  return make_scenario(num_contents, num_requesters, num_helpers, cache_size,
                       num_slots, urand(rng, 0.3, 2.0), urand(rng, 0.2, 2.0),
                       alpha, random_increasing_table(rng, num_slots));
}

}  // namespace retcache::test
