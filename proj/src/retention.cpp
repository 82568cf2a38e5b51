#include "retcache/retention.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace retcache {

ZTable::ZTable(int num_contents, int num_helpers, int num_slots)
    : num_contents_(num_contents),
      num_helpers_(num_helpers),
      num_slots_(num_slots),
      costs_(static_cast<size_t>(num_contents) * (num_helpers + 1), 0.0),
      schedules_(static_cast<size_t>(num_contents) * (num_helpers + 1) *
                     num_slots,
                 0),
      popularity_(num_contents, 0.0) {}

int ZTable::index(int content, int initial) const {
  if (content < 0 || content >= num_contents_ || initial < 0 ||
      initial > num_helpers_)
    throw std::domain_error("z-table index out of range");
  return content * (num_helpers_ + 1) + initial;
}

double ZTable::cost(int content, int initial) const {
  return costs_[index(content, initial)];
}

std::span<const int> ZTable::schedule(int content, int initial) const {
  const size_t offset =
      static_cast<size_t>(index(content, initial)) * num_slots_;
  return {schedules_.data() + offset, static_cast<size_t>(num_slots_)};
}

void ZTable::set(int content, int initial, const RetentionSchedule& schedule) {
  const int idx = index(content, initial);
  if (static_cast<int>(schedule.counts.size()) != num_slots_)
    throw std::domain_error("schedule length mismatch");
  costs_[idx] = schedule.cost;
  std::copy(schedule.counts.begin(), schedule.counts.end(),
            schedules_.begin() + static_cast<size_t>(idx) * num_slots_);
}

void ZTable::set_popularity(std::vector<double> popularity) {
  if (static_cast<int>(popularity.size()) != num_contents_)
    throw std::domain_error("popularity vector length mismatch");
  popularity_ = std::move(popularity);
}

namespace {

// The per-slot scan runs only up to the previous slot's count: once a
// helper drops a content it cannot pick it up again within the period.
RetentionSchedule greedy_core(double popularity, int initial,
                              const Scenario& sc,
                              std::span<const double> miss) {
  const int num_slots = sc.num_slots;
  RetentionSchedule out;
  out.counts.resize(num_slots);
  out.counts[0] = initial;
  out.cost = popularity * miss[initial] +
             sc.storage_weight * sc.storage_cost_fn(1) * initial;
  int prev = initial;
  for (int t = 1; t < num_slots; ++t) {
    const double price = sc.storage_weight * sc.storage_cost_fn(t + 1);
    int best_x = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int x = 0; x <= prev; ++x) {
      const double cost = popularity * miss[x] + price * x;
      if (cost < best) {  // ties keep the smaller count
        best = cost;
        best_x = x;
      }
    }
    out.counts[t] = best_x;
    out.cost += best;
    prev = best_x;
  }
  return out;
}

}  // namespace

RetentionSchedule greedy_schedule(int content, int initial,
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
  double popularity = 0;
  for (int r = 0; r < demand.num_requesters(); ++r)
    popularity += demand.at(r, content);
  return greedy_core(popularity, initial, scenario, miss_table(scenario));
}

ZTable build_z_table(const Scenario& scenario, const DemandMatrix& demand) {
  scenario.validate();
  demand.validate();
  if (demand.num_contents() != scenario.num_contents ||
      demand.num_requesters() != scenario.num_requesters)
    throw std::domain_error("demand dimensions do not match the scenario");

  const std::vector<double> miss = miss_table(scenario);
  ZTable z(scenario.num_contents, scenario.num_helpers, scenario.num_slots);
  z.set_popularity(demand.popularity());
  for (int c = 0; c < scenario.num_contents; ++c) {
    const double popularity = z.popularity()[c];
    for (int h = 0; h <= scenario.num_helpers; ++h)
      z.set(c, h, greedy_core(popularity, h, scenario, miss));
  }
  return z;
}

}  // namespace retcache
