#include <doctest.h>

#include <limits>
#include <set>

#include "kedp/exact.hpp"
#include "kedp/flow.hpp"
#include "kedp/generators.hpp"
#include "util.hpp"

using namespace kedp;
using testutil::make;

namespace {

// two parallel routes: s-a-t costs 1,1 and s-b-t costs 5,5
Instance parallel_routes() {
  return make(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 5}, {2, 3, 5}}, 1, 0, 3);
}

void check_disjoint(const Instance& g, const PathSet& ps) {
  std::set<int> used;
  REQUIRE(static_cast<int>(ps.paths.size()) == ps.k);
  for (const auto& p : ps.paths) {
    for (int e : p) {
      CHECK(used.insert(e).second);  // no edge twice anywhere
    }
    auto nodes = path_nodes(g, p);  // throws if the chain is broken
    CHECK(nodes.front() == g.s);
    CHECK(nodes.back() == g.t);
  }
}

}  // namespace

TEST_CASE("max flow basics") {
  Instance g = make(2, {{0, 1, 5}});
  CHECK(max_flow_value(g, {}) == 0);
  CHECK(max_flow_value(g, {0}) == 1);
}

TEST_CASE("max flow of the stacked tight example is k") {
  TightExample ex = build_tight_example({2, 6});
  CHECK(ex.k == 3);
  CHECK(max_flow_value(ex.graph, all_edges(ex.graph)) == 3);
}

TEST_CASE("k=1 min cost flow is a shortest path") {
  Instance g = parallel_routes();
  PathSet ps = min_cost_k_flow(g);
  REQUIRE(ps.k == 1);
  EdgeSet u = path_union(ps);
  CHECK(u == EdgeSet{0, 1});
  CHECK(total_cost(g, u) == 2);
}

TEST_CASE("infeasible demand reports the max flow") {
  Instance g = parallel_routes();
  g.k = 3;  // only 2 disjoint routes exist
  CHECK_THROWS_AS(min_cost_k_flow(g), Infeasible);
  try {
    min_cost_k_flow(g);
  } catch (const Infeasible& e) {
    CHECK(e.max_flow() == 2);
  }
}

TEST_CASE("decompose splits a hand-built flow into paths") {
  Instance g = make(3, {{0, 1, 1}, {1, 2, 1}});
  FlowNetwork net = build_network(g, all_edges(g));
  set_direction_flow(net, 0, 0, 1);
  set_direction_flow(net, 1, 0, 1);
  net.value = 1;
  PathSet ps = decompose(net);
  REQUIRE(ps.k == 1);
  CHECK(ps.paths[0] == std::vector<int>{0, 1});
}

TEST_CASE("decompose splits two disjoint routes") {
  Instance g = parallel_routes();
  FlowNetwork net = build_network(g, all_edges(g));
  for (int e = 0; e < 4; ++e) set_direction_flow(net, e, 0, 1);
  net.value = 2;
  PathSet ps = decompose(net);
  REQUIRE(ps.k == 2);
  CHECK(ps.paths[0] == std::vector<int>{0, 1});
  CHECK(ps.paths[1] == std::vector<int>{2, 3});
}

TEST_CASE("decompose rejects leftover circulation") {
  // triangle of flow not reaching t plus a direct st edge
  Instance g = make(4, {{0, 3, 1}, {1, 2, 1}});
  FlowNetwork net = build_network(g, all_edges(g));
  set_direction_flow(net, 0, 0, 1);
  set_direction_flow(net, 1, 0, 1);  // stray unit violating conservation
  net.value = 1;
  CHECK_THROWS_AS(decompose(net), StructureError);
}

TEST_CASE("tight example decomposes into k disjoint paths") {
  TightExample ex = build_tight_example({3, 6});
  REQUIRE(ex.k == 6);
  PathSet ps = min_cost_k_flow(ex.graph);
  CHECK(ps.k == 6);
  check_disjoint(ex.graph, ps);
}

TEST_CASE("flow cost matches the exhaustive oracle on a seeded sweep") {
  testutil::SweepParams sp;
  sp.count = 100;
  sp.seed0 = 900;
  sp.max_m = 14;
  for (const Instance& g : testutil::feasible_sweep(sp)) {
    FlowSolve fs = solve_min_cost_flow(g, all_edges(g), g.k);
    check_disjoint(g, fs.paths);
    CHECK(total_cost(g, path_union(fs.paths)) == fs.cost);
    PathSet oracle = exact_min_cost_paths(g);
    CHECK(fs.cost == total_cost(g, path_union(oracle)));
  }
}

TEST_CASE("successive flow values are optimal and convex") {
  testutil::SweepParams sp;
  sp.count = 30;
  sp.seed0 = 4242;
  sp.k_lo = sp.k_hi = 3;
  sp.max_m = 14;
  for (const Instance& g : testutil::feasible_sweep(sp)) {
    FlowSolve fs = solve_min_cost_flow(g, all_edges(g), g.k);
    REQUIRE(fs.cost_by_value.size() == 3);
    for (int j = 1; j <= 3; ++j) {
      Instance gj = g;
      gj.k = j;
      PathSet oracle = exact_min_cost_paths(gj);
      CHECK(fs.cost_by_value[j - 1] == total_cost(g, path_union(oracle)));
    }
    CHECK(fs.cost_by_value[0] <= fs.cost_by_value[1]);
    CHECK(fs.cost_by_value[1] <= fs.cost_by_value[2]);
    // convex marginals
    CHECK(fs.cost_by_value[2] - fs.cost_by_value[1] >=
          fs.cost_by_value[1] - fs.cost_by_value[0]);
  }
}

TEST_CASE("zero-cost edges keep the solver exact") {
  testutil::SweepParams sp;
  sp.count = 120;
  sp.seed0 = 88000;
  sp.cost_lo = 0;
  sp.cost_hi = 4;  // many ties and zero-cost cancellation chances
  sp.max_m = 14;
  sp.edge_prob = 0.7;
  for (const Instance& g : testutil::feasible_sweep(sp)) {
    FlowSolve fs = solve_min_cost_flow(g, all_edges(g), g.k);
    check_disjoint(g, fs.paths);
    CHECK(fs.cost == total_cost(g, path_union(exact_min_cost_paths(g))));
  }
}

TEST_CASE("all-zero costs still decompose cleanly") {
  testutil::SweepParams sp;
  sp.count = 60;
  sp.seed0 = 88500;
  sp.cost_lo = 0;
  sp.cost_hi = 0;
  sp.edge_prob = 0.8;
  sp.n_lo = 5;
  sp.n_hi = 8;
  for (const Instance& g : testutil::feasible_sweep(sp)) {
    PathSet ps = min_cost_k_flow(g);
    check_disjoint(g, ps);
    CHECK(total_cost(g, path_union(ps)) == 0);
  }
}

namespace {

// Independent route to the optimal cost: plain Bellman-Ford successive
// shortest paths on the residual graph, no potentials, no cancellation,
// cost reported per value. Lives only in tests.
std::vector<long long> bf_flow_costs(const Instance& g, int target) {
  struct A {
    int to, cap;
    long long cost;
  };
  std::vector<A> arcs;
  std::vector<std::vector<int>> out(g.n);
  auto add = [&](int a, int b, long long c) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, 1, c});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0, -c});
  };
  for (const Edge& e : g.edges) {
    add(e.u, e.v, e.cost);
    if (!g.directed) add(e.v, e.u, e.cost);
  }
  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> totals;
  long long total = 0;
  for (int j = 0; j < target; ++j) {
    std::vector<long long> dist(g.n, inf);
    std::vector<int> prev(g.n, -1);
    dist[g.s] = 0;
    for (int round = 0; round < g.n; ++round) {
      bool changed = false;
      for (int u = 0; u < g.n; ++u) {
        if (dist[u] >= inf) continue;
        for (int a : out[u])
          if (arcs[a].cap > 0 && dist[u] + arcs[a].cost < dist[arcs[a].to]) {
            dist[arcs[a].to] = dist[u] + arcs[a].cost;
            prev[arcs[a].to] = a;
            changed = true;
          }
      }
      if (!changed) break;
    }
    if (dist[g.t] >= inf) break;
    total += dist[g.t];
    totals.push_back(total);
    for (int v = g.t; v != g.s;) {
      int a = prev[v];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      v = arcs[a ^ 1].to;
    }
  }
  return totals;
}

}  // namespace

TEST_CASE("engine agrees with an independent search beyond oracle scale") {
  testutil::SweepParams sp;
  sp.count = 200;
  sp.seed0 = 150000;
  sp.n_lo = 6;
  sp.n_hi = 12;
  sp.k_lo = 1;
  sp.k_hi = 5;
  sp.cost_lo = 0;
  sp.cost_hi = 30;
  sp.edge_prob = 0.5;
  for (const Instance& g : testutil::feasible_sweep(sp)) {
    FlowSolve fs = solve_min_cost_flow(g, all_edges(g), g.k);
    std::vector<long long> bf = bf_flow_costs(g, g.k);
    REQUIRE(bf.size() == static_cast<size_t>(g.k));
    for (int j = 0; j < g.k; ++j) CHECK(fs.cost_by_value[j] == bf[j]);
  }
}

TEST_CASE("identical input gives identical paths") {
  testutil::SweepParams sp;
  sp.count = 20;
  sp.seed0 = 777;
  for (const Instance& g : testutil::feasible_sweep(sp)) {
    PathSet a = min_cost_k_flow(g);
    PathSet b = min_cost_k_flow(g);
    CHECK(a == b);
  }
}

TEST_CASE("directed instances flow along arcs only") {
  Instance g = make(3, {{0, 1, 1}, {2, 1, 1}}, 1, 0, 2, true);
  CHECK(max_flow_value(g, all_edges(g)) == 0);  // second arc points backwards
  Instance ok = make(3, {{0, 1, 1}, {1, 2, 1}}, 1, 0, 2, true);
  CHECK(max_flow_value(ok, all_edges(ok)) == 1);
  PathSet ps = min_cost_k_flow(ok);
  CHECK(ps.paths[0] == std::vector<int>{0, 1});
}
