#include <doctest.h>

#include <random>

#include "retcache/oracle.hpp"
#include "retcache/planner.hpp"
#include "retcache/retention.hpp"
#include "test_support.hpp"

using namespace retcache;
using namespace retcache::test;

TEST_CASE("single-cell oracle matches the planner base row") {
  std::mt19937_64 rng(50);
  const Scenario sc = random_small_scenario(rng, 1, 2, 3, 2, 1);
  const DemandMatrix demand = random_demand(rng, 2, 1);
  const OracleResult oracle = brute_force_global(sc, demand);
  const PlanResult dp = solve(build_z_table(sc, demand), sc);
  CHECK(oracle.cost == doctest::Approx(dp.cost.total()).epsilon(1e-12));
}

TEST_CASE("free storage and slack capacity fill every cell with H") {
  std::mt19937_64 rng(51);
  const Scenario sc = make_scenario(2, 2, 2, 2, 2, 1.0, 1.0, 0.0);
  const DemandMatrix demand = random_demand(rng, 2, 2);
  const OracleResult oracle = brute_force_global(sc, demand);
  for (int c = 0; c < 2; ++c)
    for (int t = 0; t < 2; ++t)
      CHECK(oracle.plan.at(c, t) == sc.num_helpers);
}

TEST_CASE("oracle agrees with the dp on random tiny instances") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const int num_contents = irand(rng, 1, 3);
    const int num_helpers = irand(rng, 1, 2);
    const int num_slots = irand(rng, 1, 2);
    const Scenario sc = random_small_scenario(rng, num_contents, irand(rng, 1, 3),
                                              num_helpers, 1, num_slots);
    const DemandMatrix demand =
        random_demand(rng, sc.num_requesters, num_contents);
    const OracleResult oracle = brute_force_global(sc, demand);
    const PlanResult dp = solve(build_z_table(sc, demand), sc);
    CHECK(dp.cost.total() ==
          doctest::Approx(oracle.cost).epsilon(1e-9));
  }
}

TEST_CASE("monotone-restricted optimum matches the unrestricted one") {
  std::mt19937_64 rng(53);
  const Scenario sc = random_small_scenario(rng, 2, 2, 2, 2, 3);
  const DemandMatrix demand = random_demand(rng, 2, 2);
  const OracleResult any = brute_force_global(sc, demand);
  const OracleResult monotone =
      brute_force_global(sc, demand, PlanShape::NonincreasingRows);
  CHECK(monotone.cost == doctest::Approx(any.cost).epsilon(1e-12));
  CHECK(monotone.cost >= any.cost - 1e-12);
}

TEST_CASE("global oracle refuses oversized instances") {
  const Scenario sc = make_scenario(100, 10, 12, 4, 24, 1.0, 1.0, 1e-4);
  const DemandMatrix demand = DemandMatrix(10, 100, [] {
    std::vector<double> entries(1000, 0.01);
    return entries;
  }());
  CHECK(global_search_space_log10(sc) > 7.0);
  try {
    brute_force_global(sc, demand);
    FAIL("expected SizeGuardError");
  } catch (const SizeGuardError& e) {
    CHECK(e.search_space_log10() > 7.0);
    CHECK(std::string(e.what()).find("10^") != std::string::npos);
  }
}

TEST_CASE("schedule oracle basics") {
  std::mt19937_64 rng(54);
  const Scenario sc = random_small_scenario(rng, 2, 2, 3, 2, 4);
  const DemandMatrix demand = random_demand(rng, 2, 2);

  const RetentionSchedule zero = brute_force_schedules(0, 0, sc, demand);
  CHECK(zero.counts == std::vector<int>(4, 0));

  const Scenario one_slot = random_small_scenario(rng, 2, 2, 3, 2, 1);
  const RetentionSchedule single = brute_force_schedules(1, 2, one_slot, demand);
  CHECK(single.counts == std::vector<int>{2});
  CHECK(single.cost ==
        doctest::Approx(slot_cost(1, 0, 2, one_slot, demand)).epsilon(1e-12));
}

TEST_CASE("schedule oracle matches greedy retention") {
  std::mt19937_64 rng(55);
  const Scenario sc = random_small_scenario(rng, 1, 2, 3, 2, 4);
  const DemandMatrix demand = random_demand(rng, 2, 1);
  const RetentionSchedule greedy = greedy_schedule(0, 3, sc, demand);
  const RetentionSchedule exhaustive = brute_force_schedules(0, 3, sc, demand);
  CHECK(greedy.cost == exhaustive.cost);
  CHECK(greedy.counts == exhaustive.counts);
}

TEST_CASE("schedule oracle refuses oversized enumerations") {
  const Scenario sc = make_scenario(1, 1, 40, 1, 16, 1.0, 1.0, 0.01,
                                    StorageCostFn::quadratic());
  CHECK_THROWS_AS(brute_force_schedules(0, 40, sc, DemandMatrix(1, 1, {1.0})),
                  SizeGuardError);
}
