#pragma once

#include "kedp/exact.hpp"
#include "kedp/solution.hpp"

namespace kedp {

// Approximation algorithm for minimum-power k edge-disjoint st-paths: take
// the union of a minimum-cost set of k edge-disjoint paths. The power of
// the result is within a factor 2*sqrt(2k) of the optimum power.
// Throws Infeasible.
Solution approximate_min_power_kedp(const Instance& g);

// The guarantee in exact integers: alg <= 2*sqrt(2k) * opt, squared to
// alg^2 <= 8k * opt^2.
bool guarantee_check(long long k, Cost alg_power, Cost opt_power);

struct PowerPair {
  Cost alg = 0;
  Cost opt = 0;
};

// Runs both the approximation and the exact oracle; the ratio is the exact
// integer pair (alg, opt), never a float. Throws Infeasible / OracleLimit.
PowerPair empirical_ratio(const Instance& g, const OracleLimits& lim = {});

}  // namespace kedp
