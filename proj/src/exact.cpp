#include "kedp/exact.hpp"

#include <algorithm>
#include <limits>

#include "kedp/minimal.hpp"

namespace kedp {

namespace {

// Candidate power levels per node: 0 plus the distinct incident edge costs,
// ascending. An optimal assignment never exceeds the largest incident cost
// it activates, so this grid is exhaustive.
std::vector<std::vector<Cost>> candidate_levels(const Instance& g,
                                                const OracleLimits& lim) {
  std::vector<std::vector<Cost>> levels(g.n, std::vector<Cost>{0});
  for (const Edge& e : g.edges) {
    levels[e.u].push_back(e.cost);
    levels[e.v].push_back(e.cost);
  }
  for (int v = 0; v < g.n; ++v) {
    auto& l = levels[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (static_cast<int>(l.size()) > lim.max_levels)
      throw OracleLimit("node " + std::to_string(v) + " has " +
                        std::to_string(l.size()) +
                        " candidate levels, oracle limit is " +
                        std::to_string(lim.max_levels));
  }
  return levels;
}

struct PowerSearch {
  const Instance& g;
  const std::vector<std::vector<Cost>>& levels;
  std::vector<Cost> cap;        // current per-node cap (assigned or max level)
  std::vector<Cost> assigned;   // levels fixed so far
  Cost best = std::numeric_limits<Cost>::max();
  Assignment best_assignment;

  // Edges activatable under the optimistic caps; if even these cannot carry
  // k disjoint paths the whole branch is dead.
  bool branch_feasible() const {
    EdgeSet eligible;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      const Edge& ed = g.edges[e];
      if (ed.cost <= std::min(cap[ed.u], cap[ed.v])) eligible.push_back(e);
    }
    return max_flow_value(g, eligible) >= g.k;
  }

  void dfs(int v, Cost partial) {
    if (partial >= best) return;
    if (!branch_feasible()) return;
    if (v == g.n) {
      best = partial;
      best_assignment.assign(assigned.begin(), assigned.end());
      return;
    }
    for (Cost lvl : levels[v]) {
      assigned[v] = lvl;
      cap[v] = lvl;
      dfs(v + 1, partial + lvl);
    }
    cap[v] = levels[v].back();
  }
};

}  // namespace

Solution exact_min_power(const Instance& g, const OracleLimits& lim) {
  if (static_cast<int>(g.edges.size()) > lim.max_edges)
    throw OracleLimit("instance has " + std::to_string(g.edges.size()) +
                      " edges, oracle limit is " +
                      std::to_string(lim.max_edges));
  int flow = max_flow_value(g, all_edges(g));
  if (flow < g.k) throw Infeasible(flow);

  auto levels = candidate_levels(g, lim);
  PowerSearch search{g, levels, {}, {}, std::numeric_limits<Cost>::max(), {}};
  search.cap.resize(g.n);
  for (int v = 0; v < g.n; ++v) search.cap[v] = levels[v].back();
  search.assigned.assign(g.n, 0);
  search.dfs(0, 0);

  Solution sol;
  sol.edges = activated_edges(g, search.best_assignment);
  sol.power = power_cost(g, sol.edges);
  sol.cost = total_cost(g, sol.edges);
  if (sol.power != search.best)
    throw StructureError("oracle power mismatch");  // would be a search bug
  sol.witness = k_disjoint_paths(g, sol.edges);
  return sol;
}

PathSet exact_min_cost_paths(const Instance& g, const OracleLimits& lim) {
  int m = static_cast<int>(g.edges.size());
  if (m > lim.max_edges || m > 30)  // subset enumeration is 2^m
    throw OracleLimit("instance has " + std::to_string(m) +
                      " edges, oracle limit is " +
                      std::to_string(std::min(lim.max_edges, 30)));
  int flow = max_flow_value(g, all_edges(g));
  if (flow < g.k) throw Infeasible(flow);

  Cost best = std::numeric_limits<Cost>::max();
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Cost c = 0;
    int deg_s = 0, deg_t = 0;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) {
        c += g.edges[e].cost;
        if (g.edges[e].u == g.s || g.edges[e].v == g.s) ++deg_s;
        if (g.edges[e].u == g.t || g.edges[e].v == g.t) ++deg_t;
      }
    if (c >= best) continue;
    if (deg_s < g.k || deg_t < g.k) continue;  // k disjoint paths need k ends
    EdgeSet F;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) F.push_back(e);
    if (max_flow_value(g, F) >= g.k) {
      best = c;
      best_mask = mask;
    }
  }
  EdgeSet F;
  for (int e = 0; e < m; ++e)
    if (best_mask & (1u << e)) F.push_back(e);
  return k_disjoint_paths(g, F);
}

}  // namespace kedp
