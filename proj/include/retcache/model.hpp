#pragma once

#include <span>
#include <string>
#include <vector>

#include "retcache/errors.hpp"

namespace retcache {

// Price of keeping one content in one helper cache during a given slot.
// Slot numbers are 1-based (the first slot of the period is slot 1).
// Builtin forms: quadratic t^2, linear t, constant 1. A table supplies one
// value per slot explicitly.
class StorageCostFn {
 public:
  enum class Kind { Quadratic, Linear, Constant, Table };

  StorageCostFn() = default;  // quadratic
  static StorageCostFn quadratic() { return StorageCostFn(Kind::Quadratic); }
  static StorageCostFn linear() { return StorageCostFn(Kind::Linear); }
  static StorageCostFn constant() { return StorageCostFn(Kind::Constant); }
  static StorageCostFn table(std::vector<double> values);
  static StorageCostFn from_name(const std::string& name);

  double operator()(int slot_number) const;

  Kind kind() const { return kind_; }
  std::string name() const;
  const std::vector<double>& values() const { return values_; }

  // The retention argument needs a strictly growing price: holding a
  // content one slot longer must cost strictly more per slot. Flat or
  // shrinking prices are rejected, as are tables that do not cover the
  // horizon. (The constant builtin only survives a one-slot horizon.)
  void validate(int num_slots) const;

  bool operator==(const StorageCostFn&) const = default;

 private:
  explicit StorageCostFn(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Quadratic;
  std::vector<double> values_;
};

struct Scenario {
  int num_contents = 0;        // C, library size
  int num_requesters = 0;      // R
  int num_helpers = 0;         // H
  int cache_size_per_helper = 0;  // s, contents per helper
  int total_capacity = 0;      // S = s * H, stored for convenience
  int num_slots = 0;           // T
  double slot_duration = 0;    // hours
  double contact_rate = 0;     // contacts per hour, homogeneous
  double storage_weight = 0;   // weighting between download and storage cost
  StorageCostFn storage_cost_fn;

  void validate() const;

  bool operator==(const Scenario&) const = default;
};

// Builds a validated scenario with total_capacity derived.
Scenario make_scenario(int num_contents, int num_requesters, int num_helpers,
                       int cache_size_per_helper, int num_slots,
                       double slot_duration, double contact_rate,
                       double storage_weight,
                       StorageCostFn storage_cost_fn = StorageCostFn::quadratic());

// Per-requester content request probabilities, R rows by C columns.
// Every row is a distribution: entries in [0,1], sum 1 within 1e-9.
class DemandMatrix {
 public:
  DemandMatrix() = default;
  DemandMatrix(int num_requesters, int num_contents, std::vector<double> entries);
  static DemandMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int num_requesters() const { return rows_; }
  int num_contents() const { return cols_; }
  double at(int requester, int content) const;
  std::span<const double> row(int requester) const;

  // Aggregate popularity per content (column sums). The cost model depends
  // on demand only through this vector.
  std::vector<double> popularity() const;

  void validate() const;

  bool operator==(const DemandMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> entries_;  // row-major
};

// Helper counts per content per slot, C rows by T columns.
class CachingPlan {
 public:
  CachingPlan() = default;
  CachingPlan(int num_contents, int num_slots);  // all zeros
  CachingPlan(int num_contents, int num_slots, std::vector<int> entries);

  int num_contents() const { return rows_; }
  int num_slots() const { return cols_; }
  int at(int content, int slot) const;
  void set(int content, int slot, int count);
  std::span<const int> row(int content) const;
  void set_row(int content, std::span<const int> counts);
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const CachingPlan&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> entries_;  // row-major
};

struct FeasibilityViolation {
  enum class Kind { EntryRange, SlotCapacity, DimensionMismatch };
  Kind kind;
  int content = -1;  // EntryRange only
  int slot = -1;     // EntryRange and SlotCapacity
  double amount = 0; // offending count, or capacity excess
  std::string describe() const;
};

struct FeasibilityReport {
  std::vector<FeasibilityViolation> violations;
  bool feasible() const { return violations.empty(); }
};

struct CostBreakdown {
  double download = 0;  // expected server fetches, unit price 1
  double storage = 0;   // weighted storage cost
  double total() const { return download + storage; }
};

// Probability that a slot-long request for a content held by
// `helper_count` helpers misses them all: e^(-helper_count*lambda*delta).
double miss_probability(int helper_count, const Scenario& scenario);

// e^(-x*lambda*delta) for x = 0..H; the table everything indexes into.
std::vector<double> miss_table(const Scenario& scenario);

// Cost of one content in one slot when `helper_count` helpers hold it:
// expected misses plus weighted storage. `slot` is 0-based.
double slot_cost(int content, int slot, int helper_count,
                 const Scenario& scenario, const DemandMatrix& demand);
double slot_cost(double popularity, int slot, int helper_count,
                 const Scenario& scenario);

CostBreakdown total_cost(const CachingPlan& plan, const Scenario& scenario,
                         const DemandMatrix& demand);

// Same sum, driven by the precomputed popularity vector. All planners and
// the oracle price plans through this one function.
CostBreakdown plan_cost_from_popularity(const CachingPlan& plan,
                                        const Scenario& scenario,
                                        std::span<const double> popularity);
CostBreakdown plan_cost_from_popularity(std::span<const int> entries,
                                        int num_contents, int num_slots,
                                        const Scenario& scenario,
                                        std::span<const double> popularity);

// Lists every violated constraint: per-entry count range and per-slot
// aggregate capacity. Returns a verdict, never throws.
FeasibilityReport check_feasibility(const CachingPlan& plan,
                                    const Scenario& scenario);

}  // namespace retcache
