#pragma once

#include <cstdint>
#include <string>

#include "retcache/model.hpp"

namespace retcache {

// Bernoulli draws the miss event directly with probability e^(-x*lambda*delta);
// Poisson draws the number of useful helper contacts in the slot and misses
// on zero. Both sample the same distribution of misses.
enum class ContactModel { Bernoulli, Poisson };

struct SimConfig {
  int trials = 10000;
  std::uint64_t seed = 1;
  ContactModel model = ContactModel::Bernoulli;
};

struct SimResult {
  double empirical_download_cost = 0;  // mean misses per trial over the period
  double standard_error = 0;
  double analytic_download_cost = 0;
  double z_score = 0;  // (empirical - analytic) / standard_error, 0 when se == 0
  int trials = 0;
  std::uint64_t seed = 0;
  std::string model;
  std::string generator;
};

// Monte Carlo check of the analytic download cost: per trial, each requester
// asks for one content per slot and misses when it meets no helper holding
// it. Storage cost is deterministic and not simulated.
SimResult simulate(const CachingPlan& plan, const Scenario& scenario,
                   const DemandMatrix& demand, const SimConfig& config);

}  // namespace retcache
