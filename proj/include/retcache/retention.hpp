#pragma once

#include <span>
#include <vector>

#include "retcache/model.hpp"

namespace retcache {

// Helper counts over the horizon for one content and one initial count.
// Nonincreasing; counts[0] is the initial count.
struct RetentionSchedule {
  std::vector<int> counts;
  double cost = 0;  // summed slot costs over the horizon
};

// Per content, the minimum total cost over the horizon for every possible
// initial helper count, plus the schedule that attains it.
class ZTable {
 public:
  ZTable() = default;
  ZTable(int num_contents, int num_helpers, int num_slots);

  int num_contents() const { return num_contents_; }
  int num_helpers() const { return num_helpers_; }
  int num_slots() const { return num_slots_; }

  double cost(int content, int initial) const;
  std::span<const int> schedule(int content, int initial) const;
  std::span<const double> popularity() const { return popularity_; }

  void set(int content, int initial, const RetentionSchedule& schedule);
  void set_popularity(std::vector<double> popularity);

 private:
  int index(int content, int initial) const;

  int num_contents_ = 0;
  int num_helpers_ = 0;
  int num_slots_ = 0;
  std::vector<double> costs_;      // C x (H+1)
  std::vector<int> schedules_;     // C x (H+1) x T
  std::vector<double> popularity_; // C
};

// Holding the initial count fixed, picks for every later slot the count in
// {0..previous} with the cheapest slot cost (ties toward fewer helpers).
// The result is the optimal retention schedule for that initial count.
RetentionSchedule greedy_schedule(int content, int initial,
                                  const Scenario& scenario,
                                  const DemandMatrix& demand);

ZTable build_z_table(const Scenario& scenario, const DemandMatrix& demand);

}  // namespace retcache
