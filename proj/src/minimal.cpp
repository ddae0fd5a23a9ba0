#include "kedp/minimal.hpp"

#include <algorithm>

namespace kedp {

bool is_feasible(const Instance& g, const EdgeSet& F) {
  return max_flow_value(g, F) >= g.k;
}

EdgeSet prune_to_minimal(const Instance& g, const EdgeSet& F) {
  int flow = max_flow_value(g, F);
  if (flow < g.k) throw Infeasible(flow);

  // Deletion order: expensive edges first, ties by descending index. A single
  // pass suffices: feasibility is monotone, so an edge kept against a larger
  // set stays necessary in every subset.
  EdgeSet order = F;
  std::sort(order.begin(), order.end(), [&g](int a, int b) {
    if (g.edges[a].cost != g.edges[b].cost)
      return g.edges[a].cost > g.edges[b].cost;
    return a > b;
  });

  std::vector<bool> kept(g.edges.size(), false);
  for (int e : F) kept[e] = true;
  EdgeSet current = F;
  for (int e : order) {
    EdgeSet trial;
    trial.reserve(current.size() - 1);
    for (int x : current)
      if (x != e) trial.push_back(x);
    if (max_flow_value(g, trial) >= g.k) {
      kept[e] = false;
      current = std::move(trial);
    }
  }
  return current;
}

bool is_minimal(const Instance& g, const EdgeSet& F) {
  if (max_flow_value(g, F) < g.k) return false;
  for (size_t i = 0; i < F.size(); ++i) {
    EdgeSet trial;
    trial.reserve(F.size() - 1);
    for (size_t j = 0; j < F.size(); ++j)
      if (j != i) trial.push_back(F[j]);
    if (max_flow_value(g, trial) >= g.k) return false;
  }
  return true;
}

}  // namespace kedp
