#pragma once

#include <cstdint>

#include "kedp/graph.hpp"

namespace kedp {

// Parameters of the extremal density example: `layers` stacked jump layers
// over an st-path with `interior` internal nodes. Valid when
// 1 <= layers <= interior/2.
struct TightParams {
  int layers = 1;
  int interior = 2;
};

// One layer: on the st-path with `interior` internal nodes, all edges of
// jump length exactly `span` plus the terminal edges of length < span.
// Forms `span` edge-disjoint st-paths; k is set to span. Unit costs.
Instance build_layer(int span, int interior);

struct TightExample {
  Instance graph;
  long long k = 0;          // layers * (layers + 1) / 2
  int subdivided = 0;       // duplicate terminal edges split to stay simple
  long long nominal_n = 0;  // closed-form prediction interior + layers^2 + 2
  long long nominal_m = 0;  // interior*layers + k + layers^2
};

// Stacks layers 1..layers and restores simplicity by subdividing duplicate
// terminal edges (one representative per parallel class kept intact, each
// duplicate split once with a fresh midpoint). Realized n,m are reported by
// the instance itself; the nominal formulas are kept alongside since the
// per-class policy subdivides layers*(layers-1) edges, not layers^2.
// With unit_costs false every edge costs its jump length instead of 1;
// subdivided halves inherit the parent cost.
TightExample build_tight_example(const TightParams& p, bool unit_costs = true);

struct RandomParams {
  std::uint64_t seed = 1;
  int n = 5;
  double edge_prob = 0.5;
  int m = -1;  // >= 0: draw exactly m distinct edges, ignoring edge_prob
  Cost cost_lo = 1;
  Cost cost_hi = 1;
  int k = 1;
};

// Seed-deterministic simple instance with s = 0, t = n-1. Feasibility is
// not guaranteed; callers filter with max_flow_value.
Instance random_instance(const RandomParams& p);

}  // namespace kedp
