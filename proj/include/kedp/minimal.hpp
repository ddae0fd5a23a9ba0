#pragma once

#include "kedp/flow.hpp"
#include "kedp/graph.hpp"

namespace kedp {

// True iff (V, F) contains k edge-disjoint st-paths (k from the instance).
bool is_feasible(const Instance& g, const EdgeSet& F);

// Inclusion-minimal feasible subset of F. Deletion candidates are tried in
// descending cost, ties broken by descending index; each candidate is tested
// with a fresh max-flow run. Throws Infeasible if F itself is not feasible.
EdgeSet prune_to_minimal(const Instance& g, const EdgeSet& F);

// True iff F is feasible and every single-edge deletion is infeasible.
bool is_minimal(const Instance& g, const EdgeSet& F);

}  // namespace kedp
