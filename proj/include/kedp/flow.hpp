#pragma once

#include <array>
#include <vector>

#include "kedp/graph.hpp"

namespace kedp {

// k pairwise edge-disjoint s->t paths; each path is an ordered list of edge
// indices of the originating instance.
struct PathSet {
  int k = 0;
  std::vector<std::vector<int>> paths;
  friend bool operator==(const PathSet&, const PathSet&) = default;
};

// Sorted distinct union of all path edges.
EdgeSet path_union(const PathSet& ps);

// Node sequence s, ..., t of one path. Throws StructureError if consecutive
// edges do not chain.
std::vector<int> path_nodes(const Instance& g, const std::vector<int>& path);

// Residual network of the min-cost solver. Arc i pairs with i^1; `cap` is
// the remaining residual capacity. An undirected edge contributes one arc
// pair per direction, a directed edge a single pair.
struct FlowArc {
  int tail = 0;
  int head = 0;
  int cap = 0;
  Cost cost = 0;
  int edge = -1;  // originating edge index
};

struct FlowNetwork {
  int n = 0;
  int s = 0;
  int t = 0;
  int value = 0;  // units currently routed s -> t
  std::vector<FlowArc> arcs;
  std::vector<std::vector<int>> out;  // per node, arc ids ascending
  // Per original edge: the capacity-1 arc of each direction (u->v, v->u);
  // -1 if absent (edge outside the solved subset, or directed).
  std::vector<std::array<int, 2>> dir_arcs;

  // Units currently flowing through `edge` in direction dir (0: u->v).
  int direction_flow(int edge, int dir) const;
};

FlowNetwork build_network(const Instance& g, const EdgeSet& within);

// Test/diagnostic hook: force `units` (0 or 1) of flow onto one direction of
// an edge, bypassing the solver.
void set_direction_flow(FlowNetwork& net, int edge, int dir, int units);

// Maximum number of edge-disjoint st-paths inside F (Dinic, unit caps).
int max_flow_value(const Instance& g, const EdgeSet& F);

// Exact minimum-cost set of k edge-disjoint st-paths over the whole edge
// set, k taken from the instance. Throws Infeasible when max flow < k.
PathSet min_cost_k_flow(const Instance& g);

// Extracts value-many edge-disjoint s->t paths from a finalized integral
// flow, consuming it. The finalized flow must be cycle-free; leftover flow
// after extraction raises StructureError.
PathSet decompose(FlowNetwork& net);

struct FlowSolve {
  PathSet paths;
  Cost cost = 0;                    // cost of the value-k flow
  std::vector<Cost> cost_by_value;  // optimal cost at value 1..k
};

// Successive shortest augmenting paths with node potentials, restricted to
// `within`. Exact optimum for every intermediate value. Deterministic.
FlowSolve solve_min_cost_flow(const Instance& g, const EdgeSet& within,
                              int target);

// k edge-disjoint paths inside `within` (k from the instance); min-cost so
// the result is deterministic. Throws Infeasible.
PathSet k_disjoint_paths(const Instance& g, const EdgeSet& within);

}  // namespace kedp
