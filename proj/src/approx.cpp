#include "kedp/approx.hpp"

namespace kedp {

Solution approximate_min_power_kedp(const Instance& g) {
  PathSet paths = min_cost_k_flow(g);
  Solution sol;
  sol.edges = path_union(paths);
  sol.power = power_cost(g, sol.edges);
  sol.cost = total_cost(g, sol.edges);
  sol.witness = std::move(paths);
  return sol;
}

bool guarantee_check(long long k, Cost alg_power, Cost opt_power) {
  return squared_leq(alg_power, 8 * k, opt_power);
}

PowerPair empirical_ratio(const Instance& g, const OracleLimits& lim) {
  PowerPair pair;
  pair.alg = approximate_min_power_kedp(g).power;
  pair.opt = exact_min_power(g, lim).power;
  return pair;
}

}  // namespace kedp
