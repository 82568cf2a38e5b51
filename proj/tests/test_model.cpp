#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "retcache/model.hpp"
#include "test_support.hpp"

using namespace retcache;
using namespace retcache::test;

namespace {

Scenario unit_scenario(int num_helpers, double alpha, int num_slots = 1,
                       StorageCostFn fn = StorageCostFn::quadratic()) {
  return make_scenario(1, 1, num_helpers, 1, num_slots, 1.0, 1.0, alpha,
                       std::move(fn));
}

const DemandMatrix kUnitDemand = DemandMatrix(1, 1, {1.0});

}  // namespace

TEST_CASE("miss probability matches the contact model") {
  const Scenario sc = make_scenario(1, 1, 4, 1, 1, 3.0, 2.0, 0.0);
  CHECK(miss_probability(0, sc) == 1.0);

  const Scenario unit = unit_scenario(4, 0.0);
  CHECK(miss_probability(1, unit) == doctest::Approx(0.36787944117144233).epsilon(1e-14));

  const Scenario sc2 = make_scenario(1, 1, 4, 1, 1, 2.0, 0.5, 0.0);
  CHECK(miss_probability(2, sc2) == doctest::Approx(0.1353352832366127).epsilon(1e-14));

  CHECK_THROWS_AS(miss_probability(-1, unit), std::domain_error);
  CHECK_THROWS_AS(miss_probability(5, unit), std::domain_error);
}

TEST_CASE("miss probability is multiplicative and strictly decreasing") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Scenario sc = make_scenario(1, 1, 8, 1, 1, urand(rng, 0.2, 2.0),
                                      urand(rng, 0.2, 2.0), 0.0);
    const int a = irand(rng, 0, 4);
    const int b = irand(rng, 0, 4);
    CHECK(miss_probability(a + b, sc) ==
          doctest::Approx(miss_probability(a, sc) * miss_probability(b, sc))
              .epsilon(1e-12));
    for (int x = 1; x <= sc.num_helpers; ++x)
      CHECK(miss_probability(x, sc) < miss_probability(x - 1, sc));
  }
}

TEST_CASE("slot cost evaluates misses plus weighted storage") {
  const Scenario sc = unit_scenario(3, 0.1);

  CHECK(slot_cost(0, 0, 0, sc, kUnitDemand) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(slot_cost(0, 0, 1, sc, kUnitDemand) == doctest::Approx(0.4678794411714423).epsilon(1e-14));
  CHECK(slot_cost(0, 0, 2, sc, kUnitDemand) == doctest::Approx(0.3353352832366127).epsilon(1e-14));
  CHECK(slot_cost(0, 0, 3, sc, kUnitDemand) == doctest::Approx(0.34978706836786394).epsilon(1e-14));

  int best_x = 0;
  double best = slot_cost(0, 0, 0, sc, kUnitDemand);
  for (int x = 1; x <= sc.num_helpers; ++x) {
    const double cost = slot_cost(0, 0, x, sc, kUnitDemand);
    if (cost < best) {
      best = cost;
      best_x = x;
    }
  }
  CHECK(best_x == 2);

  CHECK_THROWS_AS(slot_cost(1, 0, 0, sc, kUnitDemand), std::domain_error);
  CHECK_THROWS_AS(slot_cost(0, 1, 0, sc, kUnitDemand), std::domain_error);
  CHECK_THROWS_AS(slot_cost(0, 0, 4, sc, kUnitDemand), std::domain_error);
}

TEST_CASE("free storage pushes the slot-cost argmin to H") {
  const Scenario sc = unit_scenario(5, 0.0);
  int best_x = 0;
  double best = slot_cost(0, 0, 0, sc, kUnitDemand);
  for (int x = 1; x <= sc.num_helpers; ++x) {
    const double cost = slot_cost(0, 0, x, sc, kUnitDemand);
    if (cost < best) {
      best = cost;
      best_x = x;
    }
  }
  CHECK(best_x == sc.num_helpers);
}

TEST_CASE("slot cost sees demand only through the column sum") {
  std::mt19937_64 rng(42);
  const Scenario sc = make_scenario(3, 4, 2, 1, 2, 1.0, 1.0, 0.05,
                                    StorageCostFn::quadratic());
  const DemandMatrix demand = random_demand(rng, 4, 3);

  std::vector<std::vector<double>> rows;
  for (int r = 0; r < 4; ++r) {
    const auto row = demand.row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  std::swap(rows[0], rows[3]);
  std::swap(rows[1], rows[2]);
  const DemandMatrix permuted = DemandMatrix::from_rows(rows);

  for (int c = 0; c < 3; ++c)
    for (int t = 0; t < 2; ++t)
      for (int x = 0; x <= 2; ++x)
        CHECK(slot_cost(c, t, x, sc, demand) ==
              doctest::Approx(slot_cost(c, t, x, sc, permuted)).epsilon(1e-12));
}

TEST_CASE("total cost of the all-zero plan is R*T") {
  std::mt19937_64 rng(43);
  const Scenario sc = make_scenario(5, 4, 3, 2, 6, 1.0, 1.0, 0.2,
                                    StorageCostFn::quadratic());
  const DemandMatrix demand = random_demand(rng, 4, 5);
  const CachingPlan zeros(5, 6);
  const CostBreakdown cost = total_cost(zeros, sc, demand);
  CHECK(cost.download == doctest::Approx(4.0 * 6.0).epsilon(1e-12));
  CHECK(cost.storage == 0.0);
}

TEST_CASE("total cost single-cell example") {
  const Scenario sc = unit_scenario(1, 0.5);
  const CachingPlan plan(1, 1, {1});
  const CostBreakdown cost = total_cost(plan, sc, kUnitDemand);
  CHECK(cost.total() == doctest::Approx(0.8678794411714423).epsilon(1e-14));
}

TEST_CASE("total cost equals the sum of slot costs") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const int num_contents = irand(rng, 1, 4);
    const int num_requesters = irand(rng, 1, 3);
    const int num_helpers = irand(rng, 1, 3);
    const int num_slots = irand(rng, 1, 4);
    const Scenario sc = random_small_scenario(rng, num_contents, num_requesters,
                                              num_helpers, 2, num_slots);
    const DemandMatrix demand = random_demand(rng, num_requesters, num_contents);
    CachingPlan plan(num_contents, num_slots);
    for (int c = 0; c < num_contents; ++c)
      for (int t = 0; t < num_slots; ++t)
        plan.set(c, t, irand(rng, 0, num_helpers));

    double by_slots = 0;
    for (int c = 0; c < num_contents; ++c)
      for (int t = 0; t < num_slots; ++t)
        by_slots += slot_cost(c, t, plan.at(c, t), sc, demand);
    const double direct = total_cost(plan, sc, demand).total();
    CHECK(direct == doctest::Approx(by_slots).epsilon(1e-9));
  }
}

TEST_CASE("total cost rejects mismatched dimensions") {
  const Scenario sc = unit_scenario(1, 0.5);
  CHECK_THROWS_AS(total_cost(CachingPlan(2, 1), sc, kUnitDemand),
                  std::domain_error);
  CHECK_THROWS_AS(total_cost(CachingPlan(1, 1), sc, DemandMatrix(1, 2, {0.5, 0.5})),
                  std::domain_error);
}

TEST_CASE("slot-t argmin stays ahead of larger counts at later slots") {
  // With a strictly increasing price, any count above the slot-t argmin is
  // strictly worse at every later slot.
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    const int num_helpers = irand(rng, 1, 4);
    const int num_slots = irand(rng, 2, 5);
    const Scenario sc = make_scenario(
        1, 1, num_helpers, 1, num_slots, urand(rng, 0.3, 1.5),
        urand(rng, 0.3, 1.5), urand(rng, 0.01, 0.5),
        random_increasing_table(rng, num_slots));
    const double popularity = urand(rng, 0.2, 1.0);
    for (int t = 0; t < num_slots - 1; ++t) {
      int best_x = 0;
      double best = slot_cost(popularity, t, 0, sc);
      for (int x = 1; x <= num_helpers; ++x) {
        const double cost = slot_cost(popularity, t, x, sc);
        if (cost < best) {
          best = cost;
          best_x = x;
        }
      }
      for (int later = t + 1; later < num_slots; ++later)
        for (int above = best_x + 1; above <= num_helpers; ++above)
          CHECK(slot_cost(popularity, later, above, sc) >
                slot_cost(popularity, later, best_x, sc));
    }
  }
}

TEST_CASE("feasibility verdict lists violations") {
  const Scenario sc = make_scenario(3, 1, 2, 2, 2, 1.0, 1.0, 0.0);

  CHECK(check_feasibility(CachingPlan(3, 2), sc).feasible());

  CachingPlan out_of_range(3, 2);
  out_of_range.set(1, 1, sc.num_helpers + 1);
  const auto range_report = check_feasibility(out_of_range, sc);
  REQUIRE(range_report.violations.size() == 1);
  CHECK(range_report.violations[0].kind == FeasibilityViolation::Kind::EntryRange);
  CHECK(range_report.violations[0].content == 1);
  CHECK(range_report.violations[0].slot == 1);

  // Column sums (2,2,1) = 5 against capacity 4 in the first slot.
  CachingPlan over_capacity(3, 2, {2, 0, 2, 0, 1, 0});
  const auto capacity_report = check_feasibility(over_capacity, sc);
  REQUIRE(capacity_report.violations.size() == 1);
  CHECK(capacity_report.violations[0].kind ==
        FeasibilityViolation::Kind::SlotCapacity);
  CHECK(capacity_report.violations[0].slot == 0);
  CHECK(capacity_report.violations[0].amount == doctest::Approx(1.0));

  const auto mismatch = check_feasibility(CachingPlan(2, 2), sc);
  REQUIRE(mismatch.violations.size() == 1);
  CHECK(mismatch.violations[0].kind ==
        FeasibilityViolation::Kind::DimensionMismatch);
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(make_scenario(0, 1, 1, 1, 1, 1.0, 1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(make_scenario(1, 1, 1, 1, 1, 0.0, 1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(make_scenario(1, 1, 1, 1, 1, 1.0, -1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(make_scenario(1, 1, 1, 1, 1, 1.0, 1.0, -0.1), ValidationError);

  Scenario sc = make_scenario(2, 1, 2, 2, 1, 1.0, 1.0, 0.0);
  sc.total_capacity = 5;
  CHECK_THROWS_AS(sc.validate(), ValidationError);
}

TEST_CASE("storage cost functions") {
  CHECK(StorageCostFn::quadratic()(3) == 9.0);
  CHECK(StorageCostFn::linear()(3) == 3.0);
  CHECK(StorageCostFn::constant()(3) == 1.0);
  CHECK(StorageCostFn::table({1.0, 4.0, 9.5})(3) == 9.5);
  CHECK_THROWS_AS(StorageCostFn::quadratic()(0), std::domain_error);
  CHECK_THROWS_AS(StorageCostFn::from_name("cubic"), ValidationError);

  // Strictly increasing is required beyond a single slot.
  CHECK_NOTHROW(StorageCostFn::constant().validate(1));
  CHECK_THROWS_AS(StorageCostFn::constant().validate(2), ValidationError);
  CHECK_NOTHROW(StorageCostFn::quadratic().validate(24));
  CHECK_THROWS_AS(StorageCostFn::table({1.0, 1.0}).validate(2), ValidationError);
  CHECK_THROWS_AS(StorageCostFn::table({2.0, 1.0}).validate(2), ValidationError);
  CHECK_THROWS_AS(StorageCostFn::table({1.0, 2.0}).validate(3), ValidationError);
  CHECK_THROWS_AS(StorageCostFn::table({-1.0, 2.0}).validate(2), ValidationError);
}

TEST_CASE("demand matrix validation") {
  CHECK_NOTHROW(DemandMatrix(1, 2, {0.5, 0.5}).validate());
  CHECK_THROWS_AS(DemandMatrix(1, 2, {0.6, 0.6}).validate(), ValidationError);
  CHECK_THROWS_AS(DemandMatrix(1, 2, {1.5, -0.5}).validate(), ValidationError);
  CHECK_THROWS_AS(DemandMatrix::from_rows({{0.5, 0.5}, {1.0}}), ValidationError);
}
