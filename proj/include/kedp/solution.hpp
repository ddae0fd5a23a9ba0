#pragma once

#include "kedp/flow.hpp"
#include "kedp/graph.hpp"

namespace kedp {

// An edge set containing k edge-disjoint st-paths, with its two objective
// values and the witnessing paths.
struct Solution {
  EdgeSet edges;
  Cost power = 0;
  Cost cost = 0;
  PathSet witness;
};

}  // namespace kedp
