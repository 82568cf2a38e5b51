#include "retcache/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace retcache {

StorageCostFn StorageCostFn::table(std::vector<double> values) {
  StorageCostFn fn(Kind::Table);
  fn.values_ = std::move(values);
  return fn;
}

StorageCostFn StorageCostFn::from_name(const std::string& name) {
  if (name == "quadratic") return quadratic();
  if (name == "linear") return linear();
  if (name == "constant") return constant();
  throw ValidationError("storage_cost: unknown builtin '" + name +
                        "' (expected quadratic, linear or constant)");
}

double StorageCostFn::operator()(int slot_number) const {
  if (slot_number < 1) throw std::domain_error("slot numbers start at 1");
  switch (kind_) {
    case Kind::Quadratic:
      return static_cast<double>(slot_number) * slot_number;
    case Kind::Linear:
      return static_cast<double>(slot_number);
    case Kind::Constant:
      return 1.0;
    case Kind::Table:
      if (slot_number > static_cast<int>(values_.size()))
        throw std::domain_error("slot number beyond storage cost table");
      return values_[slot_number - 1];
  }
  throw std::logic_error("unreachable");
}

std::string StorageCostFn::name() const {
  switch (kind_) {
    case Kind::Quadratic: return "quadratic";
    case Kind::Linear: return "linear";
    case Kind::Constant: return "constant";
    case Kind::Table: return "table";
  }
  throw std::logic_error("unreachable");
}

void StorageCostFn::validate(int num_slots) const {
  if (kind_ == Kind::Table &&
      static_cast<int>(values_.size()) != num_slots) {
    std::ostringstream msg;
    msg << "storage_cost: table has " << values_.size()
        << " entries but the horizon has " << num_slots << " slots";
    throw ValidationError(msg.str());
  }
  if (kind_ == Kind::Table) {
    for (double v : values_)
      if (!(v >= 0))
        throw ValidationError("storage_cost: table entries must be >= 0");
  }
  for (int t = 1; t < num_slots; ++t) {
    if (!((*this)(t + 1) > (*this)(t))) {
      std::ostringstream msg;
      msg << "storage_cost: f must be strictly increasing over slots, but f("
          << t + 1 << ") <= f(" << t << ")";
      throw ValidationError(msg.str());
    }
  }
}

void Scenario::validate() const {
  auto positive_count = [](int v, const char* field) {
    if (v < 1)
      throw ValidationError(std::string(field) + " must be >= 1");
  };
  positive_count(num_contents, "num_contents");
  positive_count(num_requesters, "num_requesters");
  positive_count(num_helpers, "num_helpers");
  positive_count(cache_size_per_helper, "cache_size_per_helper");
  positive_count(num_slots, "num_slots");
  if (!(slot_duration > 0))
    throw ValidationError("slot_duration must be > 0");
  if (!(contact_rate > 0))
    throw ValidationError("contact_rate must be > 0");
  if (!(storage_weight >= 0))
    throw ValidationError("storage_weight must be >= 0");
  if (total_capacity != cache_size_per_helper * num_helpers) {
    std::ostringstream msg;
    msg << "total_capacity must equal cache_size_per_helper * num_helpers ("
        << cache_size_per_helper * num_helpers << "), got " << total_capacity;
    throw ValidationError(msg.str());
  }
  storage_cost_fn.validate(num_slots);
}

Scenario make_scenario(int num_contents, int num_requesters, int num_helpers,
                       int cache_size_per_helper, int num_slots,
                       double slot_duration, double contact_rate,
                       double storage_weight, StorageCostFn storage_cost_fn) {
  Scenario sc;
  sc.num_contents = num_contents;
  sc.num_requesters = num_requesters;
  sc.num_helpers = num_helpers;
  sc.cache_size_per_helper = cache_size_per_helper;
  sc.total_capacity = cache_size_per_helper * num_helpers;
  sc.num_slots = num_slots;
  sc.slot_duration = slot_duration;
  sc.contact_rate = contact_rate;
  sc.storage_weight = storage_weight;
  sc.storage_cost_fn = std::move(storage_cost_fn);
  sc.validate();
  return sc;
}

DemandMatrix::DemandMatrix(int num_requesters, int num_contents,
                           std::vector<double> entries)
    : rows_(num_requesters), cols_(num_contents), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != rows_ * cols_)
    throw ValidationError("demand matrix entry count does not match dimensions");
}

DemandMatrix DemandMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw ValidationError("demand matrix must have at least one row and column");
  const int cols = static_cast<int>(rows.front().size());
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols)
      throw ValidationError("demand matrix rows must all have the same length");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return DemandMatrix(static_cast<int>(rows.size()), cols, std::move(flat));
}

double DemandMatrix::at(int requester, int content) const {
  if (requester < 0 || requester >= rows_ || content < 0 || content >= cols_)
    throw std::domain_error("demand matrix index out of range");
  return entries_[static_cast<size_t>(requester) * cols_ + content];
}

std::span<const double> DemandMatrix::row(int requester) const {
  if (requester < 0 || requester >= rows_)
    throw std::domain_error("demand matrix row out of range");
  return {entries_.data() + static_cast<size_t>(requester) * cols_,
          static_cast<size_t>(cols_)};
}

std::vector<double> DemandMatrix::popularity() const {
  std::vector<double> sums(cols_, 0.0);
  for (int r = 0; r < rows_; ++r) {
    const double* row = entries_.data() + static_cast<size_t>(r) * cols_;
    for (int c = 0; c < cols_; ++c) sums[c] += row[c];
  }
  return sums;
}

void DemandMatrix::validate() const {
  if (rows_ < 1 || cols_ < 1)
    throw ValidationError("demand matrix must have at least one row and column");
  for (int r = 0; r < rows_; ++r) {
    double sum = 0;
    for (int c = 0; c < cols_; ++c) {
      const double w = entries_[static_cast<size_t>(r) * cols_ + c];
      if (!(w >= 0.0 && w <= 1.0)) {
        std::ostringstream msg;
        msg << "demand entry (" << r << "," << c << ") = " << w
            << " outside [0,1]";
        throw ValidationError(msg.str());
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      std::ostringstream msg;
      msg << "demand row " << r << " sums to " << sum << ", expected 1";
      throw ValidationError(msg.str());
    }
  }
}

CachingPlan::CachingPlan(int num_contents, int num_slots)
    : rows_(num_contents), cols_(num_slots),
      entries_(static_cast<size_t>(num_contents) * num_slots, 0) {}

CachingPlan::CachingPlan(int num_contents, int num_slots, std::vector<int> entries)
    : rows_(num_contents), cols_(num_slots), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != rows_ * cols_)
    throw ValidationError("plan entry count does not match dimensions");
}

int CachingPlan::at(int content, int slot) const {
  if (content < 0 || content >= rows_ || slot < 0 || slot >= cols_)
    throw std::domain_error("plan index out of range");
  return entries_[static_cast<size_t>(content) * cols_ + slot];
}

void CachingPlan::set(int content, int slot, int count) {
  if (content < 0 || content >= rows_ || slot < 0 || slot >= cols_)
    throw std::domain_error("plan index out of range");
  entries_[static_cast<size_t>(content) * cols_ + slot] = count;
}

std::span<const int> CachingPlan::row(int content) const {
  if (content < 0 || content >= rows_)
    throw std::domain_error("plan row out of range");
  return {entries_.data() + static_cast<size_t>(content) * cols_,
          static_cast<size_t>(cols_)};
}

void CachingPlan::set_row(int content, std::span<const int> counts) {
  if (content < 0 || content >= rows_)
    throw std::domain_error("plan row out of range");
  if (static_cast<int>(counts.size()) != cols_)
    throw std::domain_error("plan row length mismatch");
  std::copy(counts.begin(), counts.end(),
            entries_.begin() + static_cast<size_t>(content) * cols_);
}

std::string FeasibilityViolation::describe() const {
  std::ostringstream msg;
  switch (kind) {
    case Kind::EntryRange:
      msg << "entry (" << content << "," << slot << "): count " << amount
          << " outside the helper range";
      break;
    case Kind::SlotCapacity:
      msg << "slot " << slot << ": stored contents exceed capacity by "
          << amount;
      break;
    case Kind::DimensionMismatch:
      msg << "plan dimensions do not match the scenario";
      break;
  }
  return msg.str();
}

double miss_probability(int helper_count, const Scenario& scenario) {
  if (helper_count < 0 || helper_count > scenario.num_helpers)
    throw std::domain_error("helper count outside [0, H]");
  return std::exp(-helper_count * scenario.contact_rate *
                  scenario.slot_duration);
}

std::vector<double> miss_table(const Scenario& scenario) {
  std::vector<double> table(scenario.num_helpers + 1);
  for (int x = 0; x <= scenario.num_helpers; ++x)
    table[x] = std::exp(-x * scenario.contact_rate * scenario.slot_duration);
  return table;
}

double slot_cost(double popularity, int slot, int helper_count,
                 const Scenario& scenario) {
  if (slot < 0 || slot >= scenario.num_slots)
    throw std::domain_error("slot index out of range");
  if (helper_count < 0 || helper_count > scenario.num_helpers)
    throw std::domain_error("helper count outside [0, H]");
  const double miss = std::exp(-helper_count * scenario.contact_rate *
                               scenario.slot_duration);
  return popularity * miss + scenario.storage_weight *
                                 scenario.storage_cost_fn(slot + 1) *
                                 helper_count;
}

double slot_cost(int content, int slot, int helper_count,
                 const Scenario& scenario, const DemandMatrix& demand) {
  if (content < 0 || content >= scenario.num_contents)
    throw std::domain_error("content index out of range");
  if (demand.num_contents() != scenario.num_contents ||
      demand.num_requesters() != scenario.num_requesters)
    throw std::domain_error("demand dimensions do not match the scenario");
  double popularity = 0;
  for (int r = 0; r < demand.num_requesters(); ++r)
    popularity += demand.at(r, content);
  return slot_cost(popularity, slot, helper_count, scenario);
}

CostBreakdown plan_cost_from_popularity(std::span<const int> entries,
                                        int num_contents, int num_slots,
                                        const Scenario& scenario,
                                        std::span<const double> popularity) {
  if (num_contents != scenario.num_contents ||
      num_slots != scenario.num_slots ||
      static_cast<int>(entries.size()) != num_contents * num_slots)
    throw std::domain_error("plan dimensions do not match the scenario");
  if (static_cast<int>(popularity.size()) != num_contents)
    throw std::domain_error("popularity vector length mismatch");

  const std::vector<double> miss = miss_table(scenario);
  std::vector<double> slot_price(num_slots);
  for (int t = 0; t < num_slots; ++t)
    slot_price[t] = scenario.storage_weight * scenario.storage_cost_fn(t + 1);

  CostBreakdown out;
  for (int c = 0; c < num_contents; ++c) {
    const int* row = entries.data() + static_cast<size_t>(c) * num_slots;
    for (int t = 0; t < num_slots; ++t) {
      const int x = row[t];
      if (x < 0) throw std::domain_error("plan entries must be >= 0");
      // Entries beyond H only occur in deliberately infeasible plans;
      // the formula still prices them.
      const double p =
          x <= scenario.num_helpers
              ? miss[x]
              : std::exp(-x * scenario.contact_rate * scenario.slot_duration);
      out.download += popularity[c] * p;
      out.storage += slot_price[t] * x;
    }
  }
  return out;
}

CostBreakdown plan_cost_from_popularity(const CachingPlan& plan,
                                        const Scenario& scenario,
                                        std::span<const double> popularity) {
  return plan_cost_from_popularity(plan.entries(), plan.num_contents(),
                                   plan.num_slots(), scenario, popularity);
}

CostBreakdown total_cost(const CachingPlan& plan, const Scenario& scenario,
                         const DemandMatrix& demand) {
  if (demand.num_contents() != scenario.num_contents ||
      demand.num_requesters() != scenario.num_requesters)
    throw std::domain_error("demand dimensions do not match the scenario");
  return plan_cost_from_popularity(plan, scenario, demand.popularity());
}

FeasibilityReport check_feasibility(const CachingPlan& plan,
                                    const Scenario& scenario) {
  FeasibilityReport report;
  if (plan.num_contents() != scenario.num_contents ||
      plan.num_slots() != scenario.num_slots) {
    report.violations.push_back(
        {FeasibilityViolation::Kind::DimensionMismatch, -1, -1, 0});
    return report;
  }
  for (int c = 0; c < plan.num_contents(); ++c)
    for (int t = 0; t < plan.num_slots(); ++t) {
      const int x = plan.at(c, t);
      if (x < 0 || x > scenario.num_helpers)
        report.violations.push_back(
            {FeasibilityViolation::Kind::EntryRange, c, t,
             static_cast<double>(x)});
    }
  for (int t = 0; t < plan.num_slots(); ++t) {
    long long stored = 0;
    for (int c = 0; c < plan.num_contents(); ++c) stored += plan.at(c, t);
    if (stored > scenario.total_capacity)
      report.violations.push_back(
          {FeasibilityViolation::Kind::SlotCapacity, -1, t,
           static_cast<double>(stored - scenario.total_capacity)});
  }
  return report;
}

}  // namespace retcache
