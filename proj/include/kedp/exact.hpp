#pragma once

#include "kedp/solution.hpp"

namespace kedp {

// Hard limits for the exhaustive oracles. Exceeding them raises OracleLimit;
// the oracles never fall back to sampling.
struct OracleLimits {
  int max_edges = 20;
  int max_levels = 8;  // candidate power levels per node, including 0
};

// Exact minimum-power feasible edge set. Branch and bound over per-node
// power levels drawn from {0} union {incident edge costs}; a partial
// assignment is pruned when the optimistically-activated edge set cannot
// carry k disjoint paths. Throws Infeasible / OracleLimit.
Solution exact_min_power(const Instance& g, const OracleLimits& lim = {});

// Exact minimum-cost union of k edge-disjoint st-paths, by exhaustive
// search over edge subsets. Throws Infeasible / OracleLimit.
PathSet exact_min_cost_paths(const Instance& g, const OracleLimits& lim = {});

}  // namespace kedp
