#include "kedp/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

namespace kedp {

namespace {

void check_params(int layers, int interior) {
  if (layers < 1 || 2 * layers > interior)
    throw std::invalid_argument("need 1 <= layers <= interior/2");
}

// Edges of one layer on the base path 0..interior+1 (s = 0, t = interior+1):
// all pairs at distance exactly `span`, plus terminal edges of distance
// < span. (u, v, distance) with u < v.
std::vector<Edge> layer_edges(int span, int interior) {
  std::vector<Edge> edges;
  int t = interior + 1;
  for (int i = 0; i + span <= t; ++i)
    edges.push_back({i, i + span, span});
  for (int d = 1; d < span; ++d) {
    edges.push_back({0, d, d});
    edges.push_back({t - d, t, d});
  }
  return edges;
}

}  // namespace

Instance build_layer(int span, int interior) {
  check_params(span, interior);
  Instance g;
  g.n = interior + 2;
  g.s = 0;
  g.t = interior + 1;
  g.k = span;
  for (Edge e : layer_edges(span, interior)) {
    e.cost = 1;
    g.edges.push_back(e);
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const Edge& a, const Edge& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  return g;
}

TightExample build_tight_example(const TightParams& p, bool unit_costs) {
  check_params(p.layers, p.interior);
  TightExample ex;
  const long long L = p.layers;
  ex.k = L * (L + 1) / 2;
  ex.nominal_n = p.interior + L * L + 2;
  ex.nominal_m = static_cast<long long>(p.interior) * L + ex.k + L * L;

  Instance& g = ex.graph;
  g.n = p.interior + 2;
  g.s = 0;
  g.t = p.interior + 1;
  g.k = static_cast<int>(ex.k);

  // Stack the layers as a multiset; only terminal edges repeat. The first
  // copy of a parallel class stays intact, every further copy is subdivided
  // with a fresh midpoint so the graph stays simple and each layer keeps its
  // own disjoint st-paths.
  std::map<std::pair<int, int>, int> first_seen;
  for (int span = 1; span <= p.layers; ++span) {
    for (const Edge& e : layer_edges(span, p.interior)) {
      Cost c = unit_costs ? 1 : e.cost;  // layer_edges carries the distance
      auto key = std::pair(e.u, e.v);
      if (first_seen.insert({key, 1}).second) {
        g.edges.push_back({e.u, e.v, c});
      } else {
        int mid = g.n++;
        g.edges.push_back({std::min(e.u, mid), std::max(e.u, mid), c});
        g.edges.push_back({std::min(e.v, mid), std::max(e.v, mid), c});
        ++ex.subdivided;
      }
    }
  }
  return ex;
}

Instance random_instance(const RandomParams& p) {
  if (p.n < 2) throw std::invalid_argument("need n >= 2");
  if (p.k < 1) throw std::invalid_argument("need k >= 1");
  if (p.cost_lo < 0 || p.cost_lo > p.cost_hi)
    throw std::invalid_argument("bad cost range");
  if (p.m < 0 && (p.edge_prob < 0.0 || p.edge_prob > 1.0))
    throw std::invalid_argument("edge probability outside [0,1]");
  long long max_m = static_cast<long long>(p.n) * (p.n - 1) / 2;
  if (p.m > max_m) throw std::invalid_argument("m exceeds simple-graph limit");

  // raw engine draws only: the engine is specified by the standard, the
  // distributions are not, and byte-stable output matters
  std::mt19937_64 rng(p.seed);
  auto coin = [&rng](double prob) {
    return (rng() >> 11) * 0x1.0p-53 < prob;
  };
  auto draw = [&rng](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % (hi - lo + 1));
  };

  Instance g;
  g.n = p.n;
  g.s = 0;
  g.t = p.n - 1;
  g.k = p.k;

  std::vector<std::pair<int, int>> chosen;
  if (p.m >= 0) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < p.n; ++u)
      for (int v = u + 1; v < p.n; ++v) pairs.push_back({u, v});
    for (size_t i = pairs.size(); i > 1; --i)
      std::swap(pairs[i - 1], pairs[draw(0, static_cast<long long>(i) - 1)]);
    chosen.assign(pairs.begin(), pairs.begin() + p.m);
    std::sort(chosen.begin(), chosen.end());
  } else {
    for (int u = 0; u < p.n; ++u)
      for (int v = u + 1; v < p.n; ++v)
        if (coin(p.edge_prob)) chosen.push_back({u, v});
  }
  for (auto [u, v] : chosen)
    g.edges.push_back({u, v, draw(p.cost_lo, p.cost_hi)});
  return g;
}

}  // namespace kedp
