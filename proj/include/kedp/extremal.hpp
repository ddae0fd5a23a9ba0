#pragma once

#include <cstdint>
#include <utility>

#include "kedp/flow.hpp"
#include "kedp/graph.hpp"

namespace kedp {

// A minimal edge set oriented along its k disjoint paths. `digraph` keeps
// the node ids of the source instance; `edge_of[j]` is the originating
// undirected edge of digraph edge j.
struct OrientedGraph {
  Instance digraph;
  std::vector<int> edge_of;
};

// Orients F along the traversal direction of the given paths. The paths
// must cover F exactly (guaranteed when F is minimal and the paths were
// extracted inside F); the result must be acyclic. Violations raise
// StructureError.
OrientedGraph orient_minimal(const Instance& g, const EdgeSet& F,
                             const PathSet& paths);

// Node sequence v_1 = s, ..., v_last = t over the nodes of the digraph
// (endpoints of its arcs plus s,t). Every proper prefix of a valid ordering
// is a minimum st-cut with no entering arc.
struct Ordering {
  std::vector<int> sequence;
  std::vector<int> position;  // node -> index in sequence, -1 if absent
};

// Constructive ordering of a minimal acyclic digraph: repeatedly emit the
// lowest-index node all of whose in-arcs come from the already-emitted
// prefix, absorbing it. Raises StructureError when no node is eligible
// (the input was not minimal acyclic).
Ordering compute_ordering(const Instance& dg);

struct PrefixStat {
  int index = 0;  // prefix size i, 1-based
  int out_degree = 0;
  int in_degree = 0;
  bool ok = false;
};

struct OrderingReport {
  bool pass = false;
  std::vector<PrefixStat> prefixes;
  std::string failure;  // first failure, empty when pass
};

// Checks every proper prefix C_i for d_in(C_i) = 0 and d_out(C_i) = k
// (d_out <= k when require_exact is false, for inputs known sub-minimal).
OrderingReport verify_ordering(const Instance& dg, const Ordering& ord,
                               bool require_exact = true);

// |E_U|^2 <= 2k |U|^2 where E_U are the F-edges with both ends in `subset`.
// Works on undirected instances and digraphs alike.
bool check_subset_bound(const Instance& g, const EdgeSet& F,
                        const std::vector<int>& subset, long long k);

// total_cost(F)^2 <= 2k * power_cost(F)^2.
bool check_power_bound(const Instance& g, const EdgeSet& F, long long k);

// (sum over F-edges of min endpoint weight)^2 <= 2k (sum of weights)^2,
// weights summed over the nodes of (V, F) (endpoints plus s,t).
bool check_weighted_inequality(const Instance& g, const EdgeSet& F,
                               const std::vector<Cost>& weight, long long k);

struct SubsetSweep {
  long long checked = 0;
  bool all_pass = false;
  bool exhaustive = false;
};

// Runs check_subset_bound over every node subset when the touched node
// count is at most exhaustive_cap, otherwise over `samples` seeded random
// subsets.
SubsetSweep sweep_subset_bound(const Instance& g, const EdgeSet& F,
                               long long k, int exhaustive_cap = 20,
                               int samples = 256, std::uint64_t seed = 1);

// The ordering restricted to `subset` and the edges induced by it satisfy
// the prefix conditions d_in = 0 and d_out <= k; this is the constructive
// route to the subset bound.
bool subsequence_budget_hypotheses(const Instance& dg, const Ordering& ord,
                                   const std::vector<int>& subset,
                                   long long k);

// Edge lengths under an ordering: l(e) = position(head) - position(tail).
struct LengthProfile {
  std::vector<long long> edge_length;  // per digraph edge
  long long total = 0;
  long long prefix_out_total = 0;  // sum of d_out(C_i), equals total
  long long budget = 0;            // k * (|sequence| - 1)
};

// Requires a verified ordering (all lengths positive, total within budget);
// raises StructureError otherwise.
LengthProfile length_budget(const Instance& dg, const Ordering& ord);

// Number and total length of all forward pairs at distance <= max_len among
// n ordered positions, computed by direct summation:
//   count = sum_{j=1..max_len} (n - j),  length = sum_{j=1..max_len} j(n - j).
// Requires 1 <= max_len <= n-1.
std::pair<long long, long long> closed_forms(long long max_len, long long n);

// Largest number of distinct forward pairs whose total length fits the
// budget k*n: all pairs up to the widest affordable distance, then as many
// of the next distance as fit. The result m satisfies m^2 <= 2k n^2
// (verified internally). Requires k >= 1, n >= 2.
long long max_edges_under_budget(long long k, long long n);

}  // namespace kedp
