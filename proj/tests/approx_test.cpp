#include <doctest.h>

#include "kedp/approx.hpp"
#include "util.hpp"

using namespace kedp;
using testutil::make;

TEST_CASE("single edge solution") {
  Instance g = make(2, {{0, 1, 5}});
  Solution sol = approximate_min_power_kedp(g);
  CHECK(sol.edges == EdgeSet{0});
  CHECK(sol.power == 10);
  CHECK(sol.cost == 5);
  CHECK(sol.witness.k == 1);
}

TEST_CASE("guarantee check in exact integers") {
  CHECK(guarantee_check(1, 2, 1));        // 4 <= 8
  CHECK_FALSE(guarantee_check(2, 5, 1));  // 25 > 16
  CHECK(guarantee_check(2, 4, 1));        // 16 <= 16, boundary
  CHECK(guarantee_check(3, 0, 0));
  CHECK_FALSE(guarantee_check(3, 1, 0));
}

TEST_CASE("returned power is at most twice the returned cost") {
  testutil::SweepParams sp;
  sp.count = 60;
  sp.seed0 = 51;
  for (const Instance& g : testutil::feasible_sweep(sp)) {
    Solution sol = approximate_min_power_kedp(g);
    CHECK(sol.power <= 2 * sol.cost);
    CHECK(sol.power == power_cost(g, sol.edges));
    CHECK(sol.cost == total_cost(g, sol.edges));
  }
}

TEST_CASE("guarantee holds against the oracle on a seeded sweep") {
  testutil::SweepParams sp;
  sp.count = 100;
  sp.seed0 = 20240917;
  sp.max_m = 14;
  for (const Instance& g : testutil::feasible_sweep(sp)) {
    PowerPair pair = empirical_ratio(g);
    CHECK(guarantee_check(g.k, pair.alg, pair.opt));
    // min-cost optimality: the algorithm's cost never exceeds the cost of
    // the exact min-power set, which also carries k disjoint paths
    Solution alg = approximate_min_power_kedp(g);
    Solution opt = exact_min_power(g);
    CHECK(alg.cost <= opt.cost);
  }
}

TEST_CASE("ratio pair for a single edge is 10/10") {
  Instance g = make(2, {{0, 1, 5}});
  PowerPair pair = empirical_ratio(g);
  CHECK(pair.alg == 10);
  CHECK(pair.opt == 10);
}

TEST_CASE("empirical ratio propagates infeasibility") {
  Instance g = make(3, {{0, 1, 1}});
  CHECK_THROWS_AS(empirical_ratio(g), Infeasible);
}

TEST_CASE("empirical ratio propagates oracle limits") {
  Instance g = make(2, {{0, 1, 5}});
  OracleLimits lim;
  lim.max_edges = 0;
  CHECK_THROWS_AS(empirical_ratio(g, lim), OracleLimit);
}
