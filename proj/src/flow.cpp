#include "kedp/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace kedp {

EdgeSet path_union(const PathSet& ps) {
  EdgeSet u;
  for (const auto& p : ps.paths) u.insert(u.end(), p.begin(), p.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

std::vector<int> path_nodes(const Instance& g, const std::vector<int>& path) {
  std::vector<int> nodes{g.s};
  int cur = g.s;
  for (int e : path) {
    const Edge& ed = g.edges[e];
    int next;
    if (g.directed) {
      if (ed.u != cur) throw StructureError("path edge does not chain");
      next = ed.v;
    } else if (ed.u == cur) {
      next = ed.v;
    } else if (ed.v == cur) {
      next = ed.u;
    } else {
      throw StructureError("path edge does not chain");
    }
    nodes.push_back(next);
    cur = next;
  }
  if (cur != g.t) throw StructureError("path does not end at t");
  return nodes;
}

int FlowNetwork::direction_flow(int edge, int dir) const {
  int a = dir_arcs[edge][dir];
  if (a < 0) return 0;
  return arcs[a ^ 1].cap;  // reverse residual capacity equals pushed units
}

FlowNetwork build_network(const Instance& g, const EdgeSet& within) {
  FlowNetwork net;
  net.n = g.n;
  net.s = g.s;
  net.t = g.t;
  net.out.assign(g.n, {});
  net.dir_arcs.assign(g.edges.size(), {-1, -1});
  auto add_pair = [&net](int a, int b, Cost c, int e) {
    int id = static_cast<int>(net.arcs.size());
    net.arcs.push_back({a, b, 1, c, e});
    net.arcs.push_back({b, a, 0, -c, e});
    net.out[a].push_back(id);
    net.out[b].push_back(id + 1);
    return id;
  };
  for (int e : within) {
    const Edge& ed = g.edges[e];
    net.dir_arcs[e][0] = add_pair(ed.u, ed.v, ed.cost, e);
    if (!g.directed) net.dir_arcs[e][1] = add_pair(ed.v, ed.u, ed.cost, e);
  }
  return net;
}

void set_direction_flow(FlowNetwork& net, int edge, int dir, int units) {
  int a = net.dir_arcs[edge][dir];
  if (a < 0) throw StructureError("edge direction absent from network");
  net.arcs[a].cap = 1 - units;
  net.arcs[a ^ 1].cap = units;
}

// ---------------------------------------------------------------------------
// Unit-capacity max flow (Dinic). An undirected edge is one mutually-residual
// arc pair with capacity 1 on both sides, which is exactly the undirected
// unit-capacity model; a directed edge gets a zero-capacity reverse arc.
// ---------------------------------------------------------------------------

namespace {

struct DinicGraph {
  struct Arc {
    int head;
    int cap;
  };
  int n, s, t;
  std::vector<Arc> arcs;  // i pairs with i^1
  std::vector<std::vector<int>> out;
  std::vector<int> level, it;

  DinicGraph(const Instance& g, const EdgeSet& F)
      : n(g.n), s(g.s), t(g.t), out(g.n) {
    for (int e : F) {
      const Edge& ed = g.edges[e];
      int id = static_cast<int>(arcs.size());
      arcs.push_back({ed.v, 1});
      arcs.push_back({ed.u, g.directed ? 0 : 1});
      out[ed.u].push_back(id);
      out[ed.v].push_back(id + 1);
    }
  }

  bool bfs() {
    level.assign(n, -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a : out[u]) {
        int w = arcs[a].head;
        if (arcs[a].cap > 0 && level[w] < 0) {
          level[w] = level[u] + 1;
          q.push(w);
        }
      }
    }
    return level[t] >= 0;
  }

  int dfs(int u) {
    if (u == t) return 1;
    for (int& i = it[u]; i < static_cast<int>(out[u].size()); ++i) {
      int a = out[u][i];
      int w = arcs[a].head;
      if (arcs[a].cap > 0 && level[w] == level[u] + 1 && dfs(w)) {
        arcs[a].cap -= 1;
        arcs[a ^ 1].cap += 1;
        return 1;
      }
    }
    return 0;
  }

  int run() {
    int flow = 0;
    while (bfs()) {
      it.assign(n, 0);
      while (dfs(s)) ++flow;
    }
    return flow;
  }
};

}  // namespace

int max_flow_value(const Instance& g, const EdgeSet& F) {
  DinicGraph d(g, F);
  return d.run();
}

// ---------------------------------------------------------------------------
// Min-cost flow: successive shortest augmenting paths with node potentials.
// Costs are non-negative so potentials start at zero and every search is a
// Dijkstra on reduced costs. Deterministic: the queue orders by (distance,
// node), arcs are scanned in ascending index order, and only strict
// improvements update the parent, so ties resolve to the lowest node and
// then the lowest arc.
// ---------------------------------------------------------------------------

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// One augmentation. Returns false when t is unreachable (flow is maximum).
bool augment_once(FlowNetwork& net, std::vector<Cost>& pot,
                  __int128& path_cost) {
  const int n = net.n;
  std::vector<Cost> dist(n, kInf);
  std::vector<int> prev(n, -1);
  using Entry = std::pair<Cost, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  dist[net.s] = 0;
  pq.push({0, net.s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (int a : net.out[u]) {
      const FlowArc& arc = net.arcs[a];
      if (arc.cap <= 0) continue;
      Cost nd = d + arc.cost + pot[u] - pot[arc.head];
      if (nd < dist[arc.head]) {
        dist[arc.head] = nd;
        prev[arc.head] = a;
        pq.push({nd, arc.head});
      }
    }
  }
  if (dist[net.t] >= kInf) return false;

  Cost max_reach = 0;
  for (int v = 0; v < n; ++v)
    if (dist[v] < kInf) max_reach = std::max(max_reach, dist[v]);
  for (int v = 0; v < n; ++v) pot[v] += (dist[v] < kInf) ? dist[v] : max_reach;

  path_cost = 0;
  for (int v = net.t; v != net.s;) {
    int a = prev[v];
    path_cost += net.arcs[a].cost;
    net.arcs[a].cap -= 1;
    net.arcs[a ^ 1].cap += 1;
    v = net.arcs[a].tail;
  }
  net.value += 1;
  return true;
}

// Both directions of one undirected edge carrying flow is a 2-cycle; on an
// optimal flow with non-negative costs this can only happen at cost zero.
// Cancelling restores both directions and keeps value and optimality.
Cost cancel_opposite_pairs(FlowNetwork& net) {
  Cost released = 0;
  for (size_t e = 0; e < net.dir_arcs.size(); ++e) {
    int f0 = net.dir_arcs[e][0], f1 = net.dir_arcs[e][1];
    if (f0 < 0 || f1 < 0) continue;
    if (net.arcs[f0 ^ 1].cap > 0 && net.arcs[f1 ^ 1].cap > 0) {
      net.arcs[f0].cap += 1;
      net.arcs[f0 ^ 1].cap -= 1;
      net.arcs[f1].cap += 1;
      net.arcs[f1 ^ 1].cap -= 1;
      released += net.arcs[f0].cost + net.arcs[f1].cost;
      if (net.arcs[f0].cost != 0)
        throw StructureError("two-way flow on an edge of nonzero cost");
    }
  }
  return released;
}

// Directed support cycles that survive pair cancellation can only be
// zero-cost ties; remove them so the decomposition sees paths only.
Cost cancel_support_cycles(FlowNetwork& net) {
  Cost released = 0;
  const int n = net.n;
  while (true) {
    // flow-carrying direction arcs per node
    std::vector<std::vector<int>> carry(n);
    for (size_t e = 0; e < net.dir_arcs.size(); ++e)
      for (int dir = 0; dir < 2; ++dir) {
        int a = net.dir_arcs[e][dir];
        if (a >= 0 && net.arcs[a ^ 1].cap > 0)
          carry[net.arcs[a].tail].push_back(a);
      }
    // iterative DFS over the support looking for a back arc
    std::vector<int> state(n, 0);  // 0 fresh, 1 on stack, 2 done
    std::vector<int> via(n, -1);
    bool found = false;
    std::vector<int> cycle;
    for (int root = 0; root < n && !found; ++root) {
      if (state[root] != 0 || carry[root].empty()) continue;
      std::vector<std::pair<int, size_t>> stack{{root, 0}};
      state[root] = 1;
      while (!stack.empty() && !found) {
        auto& [u, idx] = stack.back();
        if (idx == carry[u].size()) {
          state[u] = 2;
          stack.pop_back();
          continue;
        }
        int a = carry[u][idx++];
        int w = net.arcs[a].head;
        if (state[w] == 1) {  // cycle w -> ... -> u -> w
          cycle.push_back(a);
          for (int x = u; x != w;) {
            cycle.push_back(via[x]);
            x = net.arcs[via[x]].tail;
          }
          found = true;
        } else if (state[w] == 0) {
          via[w] = a;
          state[w] = 1;
          stack.push_back({w, 0});
        }
      }
    }
    if (!found) break;
    for (int a : cycle) {
      released += net.arcs[a].cost;
      if (net.arcs[a].cost != 0)
        throw StructureError("support cycle of nonzero cost");
      net.arcs[a].cap += 1;
      net.arcs[a ^ 1].cap -= 1;
    }
  }
  return released;
}

}  // namespace

PathSet decompose(FlowNetwork& net) {
  // remaining flow per (edge, direction)
  std::vector<std::vector<std::pair<int, int>>> carry(net.n);  // node -> (arc, edge)
  int outflow_s = 0, inflow_s = 0;
  std::vector<int> balance(net.n, 0);
  for (size_t e = 0; e < net.dir_arcs.size(); ++e)
    for (int dir = 0; dir < 2; ++dir) {
      int a = net.dir_arcs[e][dir];
      if (a < 0) continue;
      int f = net.arcs[a ^ 1].cap;
      if (f <= 0) continue;
      if (f != 1) throw StructureError("non-integral flow");
      carry[net.arcs[a].tail].push_back({a, static_cast<int>(e)});
      balance[net.arcs[a].tail] += 1;
      balance[net.arcs[a].head] -= 1;
      if (net.arcs[a].tail == net.s) ++outflow_s;
      if (net.arcs[a].head == net.s) ++inflow_s;
    }
  for (int v = 0; v < net.n; ++v)
    if (v != net.s && v != net.t && balance[v] != 0)
      throw StructureError("flow conservation violated");
  int value = outflow_s - inflow_s;
  if (value != net.value) throw StructureError("flow value mismatch");

  for (auto& list : carry)
    std::sort(list.begin(), list.end());  // lowest arc id first

  std::vector<size_t> cursor(net.n, 0);
  PathSet ps;
  ps.k = value;
  for (int p = 0; p < value; ++p) {
    std::vector<int> path;
    int cur = net.s;
    while (cur != net.t) {
      auto& list = carry[cur];
      size_t& i = cursor[cur];
      while (i < list.size() && net.arcs[list[i].first ^ 1].cap == 0) ++i;
      if (i == list.size())
        throw StructureError("stuck while peeling a path");
      auto [a, e] = list[i];
      net.arcs[a].cap += 1;
      net.arcs[a ^ 1].cap -= 1;
      path.push_back(e);
      cur = net.arcs[a].head;
    }
    ps.paths.push_back(std::move(path));
  }
  // a finalized min-cost flow is cycle-free, so nothing may remain
  for (size_t e = 0; e < net.dir_arcs.size(); ++e)
    for (int dir = 0; dir < 2; ++dir)
      if (net.direction_flow(static_cast<int>(e), dir) != 0)
        throw StructureError("leftover flow after decomposition");
  net.value = 0;
  return ps;
}

FlowSolve solve_min_cost_flow(const Instance& g, const EdgeSet& within,
                              int target) {
  FlowNetwork net = build_network(g, within);
  std::vector<Cost> pot(g.n, 0);
  FlowSolve result;
  __int128 running = 0;  // per-path sums can approach value * max-cost
  auto narrow = [](__int128 v) {
    if (v > std::numeric_limits<Cost>::max() || v < 0)
      throw std::overflow_error("flow cost exceeds 64 bits");
    return static_cast<Cost>(v);
  };
  for (int j = 0; j < target; ++j) {
    __int128 path_cost = 0;
    if (!augment_once(net, pot, path_cost)) throw Infeasible(net.value);
    running += path_cost;
    running -= cancel_opposite_pairs(net);
    result.cost_by_value.push_back(narrow(running));
  }
  running -= cancel_support_cycles(net);
  if (!result.cost_by_value.empty())
    result.cost_by_value.back() = narrow(running);
  result.cost = narrow(running);
  result.paths = decompose(net);
  return result;
}

PathSet min_cost_k_flow(const Instance& g) {
  return solve_min_cost_flow(g, all_edges(g), g.k).paths;
}

PathSet k_disjoint_paths(const Instance& g, const EdgeSet& within) {
  return solve_min_cost_flow(g, within, g.k).paths;
}

}  // namespace kedp
