#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kedp/arith.hpp"
#include "kedp/errors.hpp"

namespace kedp {

struct Edge {
  int u = 0;
  int v = 0;
  Cost cost = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// A problem instance: a simple graph with non-negative integer edge costs,
// terminals s,t and a demand of k edge-disjoint st-paths. Undirected unless
// `directed` is set; directed instances arise internally from orienting a
// minimal subgraph, never as problem input. Undirected edges are stored with
// u < v. Immutable by convention once built.
struct Instance {
  int n = 0;
  std::vector<Edge> edges;
  bool directed = false;
  int s = 0;
  int t = 0;
  int k = 1;
  friend bool operator==(const Instance&, const Instance&) = default;
};

// Subset of an instance's edges, as sorted distinct edge indices.
using EdgeSet = std::vector<int>;

// Per-node power level.
using Assignment = std::vector<Cost>;

// Throws std::invalid_argument on violated invariants (self-loop, parallel
// edge, out-of-range endpoint, negative cost, s == t, k < 1).
void validate_instance(const Instance& g);

// Throws std::invalid_argument if F has out-of-range or duplicate indices.
void validate_edge_set(const Instance& g, const EdgeSet& F);

EdgeSet all_edges(const Instance& g);

// Endpoints of F together with s and t, sorted ascending. This is the node
// set of the subgraph (V, F) that the bound checkers work on.
std::vector<int> touched_nodes(const Instance& g, const EdgeSet& F);

// Sum over nodes of the maximum cost among incident F-edges (0 if none).
Cost power_cost(const Instance& g, const EdgeSet& F);

// Plain sum of member edge costs.
Cost total_cost(const Instance& g, const EdgeSet& F);

// a_v = max cost among F-edges at v; the assignment totals power_cost(F).
Assignment assignment_from_edges(const Instance& g, const EdgeSet& F);

// Edges e = uv with c_e <= min(a_u, a_v).
EdgeSet activated_edges(const Instance& g, const Assignment& a);

// Text format, '#' lines ignored:
//   header  "n m k s t"   (directed instances: "D n m k s t")
//   m lines "u v cost"
// Throws ParseError with the offending 1-based line number.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& g);

}  // namespace kedp
