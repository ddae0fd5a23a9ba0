#pragma once

#include <vector>

#include "kedp/flow.hpp"
#include "kedp/generators.hpp"
#include "kedp/graph.hpp"

namespace kedp::testutil {

// Small literal instance; s defaults to 0 and t to n-1.
inline Instance make(int n, std::vector<Edge> edges, int k = 1, int s = 0,
                     int t = -1, bool directed = false) {
  Instance g;
  g.n = n;
  g.edges = std::move(edges);
  g.k = k;
  g.s = s;
  g.t = (t < 0) ? n - 1 : t;
  g.directed = directed;
  return g;
}

struct SweepParams {
  int count = 100;
  std::uint64_t seed0 = 1;
  int n_lo = 4, n_hi = 7;
  int k_lo = 1, k_hi = 3;
  Cost cost_lo = 1, cost_hi = 20;
  double edge_prob = 0.6;
  int max_m = 1 << 30;
};

// Seed-deterministic stream of feasible instances. Seeds advance until
// `count` instances pass the feasibility and size filters.
inline std::vector<Instance> feasible_sweep(const SweepParams& p) {
  std::vector<Instance> out;
  std::uint64_t seed = p.seed0;
  while (static_cast<int>(out.size()) < p.count) {
    RandomParams rp;
    rp.seed = seed++;
    rp.n = p.n_lo + static_cast<int>(rp.seed % (p.n_hi - p.n_lo + 1));
    rp.k = p.k_lo + static_cast<int>((rp.seed / 7) % (p.k_hi - p.k_lo + 1));
    rp.cost_lo = p.cost_lo;
    rp.cost_hi = p.cost_hi;
    rp.edge_prob = p.edge_prob;
    Instance g = random_instance(rp);
    if (static_cast<int>(g.edges.size()) > p.max_m) continue;
    if (max_flow_value(g, all_edges(g)) < g.k) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace kedp::testutil
