#include "kedp/extremal.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace kedp {

OrientedGraph orient_minimal(const Instance& g, const EdgeSet& F,
                             const PathSet& paths) {
  std::vector<int> in_f(g.edges.size(), 0);
  for (int e : F) in_f[e] = 1;
  std::vector<int> used(g.edges.size(), 0);

  struct Oriented {
    int edge, from, to;
  };
  std::vector<Oriented> arcs;
  for (const auto& path : paths.paths) {
    int cur = g.s;
    for (int e : path) {
      if (!in_f[e]) throw StructureError("path uses an edge outside F");
      if (used[e]++) throw StructureError("edge used by two paths");
      const Edge& ed = g.edges[e];
      int next = (ed.u == cur) ? ed.v : (ed.v == cur) ? ed.u : -1;
      if (next < 0) throw StructureError("path edge does not chain");
      arcs.push_back({e, cur, next});
      cur = next;
    }
    if (cur != g.t) throw StructureError("path does not end at t");
  }
  for (int e : F)
    if (!used[e])
      throw StructureError("paths do not cover F; the edge set is not minimal");

  std::sort(arcs.begin(), arcs.end(),
            [](const Oriented& a, const Oriented& b) { return a.edge < b.edge; });

  OrientedGraph out;
  out.digraph.n = g.n;
  out.digraph.directed = true;
  out.digraph.s = g.s;
  out.digraph.t = g.t;
  out.digraph.k = g.k;
  for (const Oriented& a : arcs) {
    out.digraph.edges.push_back({a.from, a.to, g.edges[a.edge].cost});
    out.edge_of.push_back(a.edge);
  }

  // A minimal oriented graph is acyclic: a cycle could be removed without
  // changing the flow value.
  std::vector<int> indeg(g.n, 0);
  for (const Edge& e : out.digraph.edges) ++indeg[e.v];
  std::vector<std::vector<int>> heads(g.n);
  for (const Edge& e : out.digraph.edges) heads[e.u].push_back(e.v);
  std::queue<int> q;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) q.push(v);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++seen;
    for (int w : heads[v])
      if (--indeg[w] == 0) q.push(w);
  }
  if (seen != g.n) throw StructureError("orientation is cyclic");
  return out;
}

Ordering compute_ordering(const Instance& dg) {
  if (!dg.directed) throw StructureError("ordering needs a directed instance");
  std::vector<int> nodes = touched_nodes(dg, all_edges(dg));

  std::vector<std::vector<int>> in_tails(dg.n);
  for (const Edge& e : dg.edges) in_tails[e.v].push_back(e.u);

  std::vector<bool> absorbed(dg.n, false);
  absorbed[dg.s] = true;
  std::vector<int> pending;
  for (int v : nodes)
    if (v != dg.s && v != dg.t) pending.push_back(v);

  Ordering ord;
  ord.sequence.push_back(dg.s);
  std::vector<bool> done(dg.n, false);
  for (size_t round = 0; round < pending.size(); ++round) {
    int pick = -1;
    for (int z : pending) {
      if (done[z]) continue;
      bool eligible = true;
      for (int tail : in_tails[z])
        if (!absorbed[tail]) {
          eligible = false;
          break;
        }
      if (eligible) {
        pick = z;
        break;  // pending is ascending, so this is the smallest index
      }
    }
    if (pick < 0)
      throw StructureError(
          "no node with all in-arcs absorbed; input not minimal acyclic");
    done[pick] = true;
    absorbed[pick] = true;
    ord.sequence.push_back(pick);
  }
  ord.sequence.push_back(dg.t);

  ord.position.assign(dg.n, -1);
  for (int i = 0; i < static_cast<int>(ord.sequence.size()); ++i)
    ord.position[ord.sequence[i]] = i;
  return ord;
}

OrderingReport verify_ordering(const Instance& dg, const Ordering& ord,
                               bool require_exact) {
  OrderingReport rep;
  std::vector<int> nodes = touched_nodes(dg, all_edges(dg));
  const int len = static_cast<int>(ord.sequence.size());

  if (len != static_cast<int>(nodes.size())) {
    rep.failure = "sequence does not cover the graph's nodes";
    return rep;
  }
  std::vector<int> pos(dg.n, -1);
  for (int i = 0; i < len; ++i) {
    int v = ord.sequence[i];
    if (v < 0 || v >= dg.n || pos[v] >= 0) {
      rep.failure = "sequence is not a permutation";
      return rep;
    }
    pos[v] = i;
  }
  for (int v : nodes)
    if (pos[v] < 0) {
      rep.failure = "sequence misses node " + std::to_string(v);
      return rep;
    }
  rep.pass = true;
  if (ord.sequence.front() != dg.s || ord.sequence.back() != dg.t) {
    rep.pass = false;
    rep.failure = "sequence must start at s and end at t";
  }

  // d_out(C_i) and d_in(C_i) for i = 1..len-1 by difference arrays
  std::vector<long long> out_delta(len + 1, 0), in_delta(len + 1, 0);
  for (const Edge& e : dg.edges) {
    int a = pos[e.u], b = pos[e.v];
    if (a < b) {
      out_delta[a + 1] += 1;
      out_delta[std::min(b, len - 1) + 1] -= 1;
    } else {
      in_delta[b + 1] += 1;
      in_delta[std::min(a, len - 1) + 1] -= 1;
    }
  }
  long long run_out = 0, run_in = 0;
  for (int i = 1; i <= len - 1; ++i) {
    run_out += out_delta[i];
    run_in += in_delta[i];
    PrefixStat st;
    st.index = i;
    st.out_degree = static_cast<int>(run_out);
    st.in_degree = static_cast<int>(run_in);
    st.ok = (run_in == 0) &&
            (require_exact ? run_out == dg.k : run_out <= dg.k);
    if (!st.ok) {
      if (rep.pass || rep.failure.empty())
        rep.failure = "prefix " + std::to_string(i) + ": d_out=" +
                      std::to_string(run_out) +
                      " d_in=" + std::to_string(run_in);
      rep.pass = false;
    }
    rep.prefixes.push_back(st);
  }
  return rep;
}

bool check_subset_bound(const Instance& g, const EdgeSet& F,
                        const std::vector<int>& subset, long long k) {
  std::vector<bool> in(g.n, false);
  for (int v : subset) in[v] = true;
  long long count = 0;
  for (int e : F)
    if (in[g.edges[e].u] && in[g.edges[e].v]) ++count;
  return squared_leq(count, 2 * k, static_cast<Cost>(subset.size()));
}

bool check_power_bound(const Instance& g, const EdgeSet& F, long long k) {
  return squared_leq(total_cost(g, F), 2 * k, power_cost(g, F));
}

bool check_weighted_inequality(const Instance& g, const EdgeSet& F,
                               const std::vector<Cost>& weight, long long k) {
  if (static_cast<int>(weight.size()) != g.n)
    throw std::invalid_argument("weight vector size mismatch");
  __int128 lhs = 0;
  for (int e : F)
    lhs += std::min(weight[g.edges[e].u], weight[g.edges[e].v]);
  __int128 rhs = 0;
  for (int v : touched_nodes(g, F)) rhs += weight[v];
  if (lhs > std::numeric_limits<Cost>::max() ||
      rhs > std::numeric_limits<Cost>::max())
    throw std::overflow_error("weight sums exceed 64 bits");
  return squared_leq(static_cast<Cost>(lhs), 2 * k, static_cast<Cost>(rhs));
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SubsetSweep sweep_subset_bound(const Instance& g, const EdgeSet& F,
                               long long k, int exhaustive_cap, int samples,
                               std::uint64_t seed) {
  std::vector<int> touched = touched_nodes(g, F);
  const int tn = static_cast<int>(touched.size());
  SubsetSweep sweep;
  sweep.all_pass = true;

  if (tn <= exhaustive_cap) {
    sweep.exhaustive = true;
    std::vector<int> bit(g.n, -1);
    for (int i = 0; i < tn; ++i) bit[touched[i]] = i;
    std::vector<std::uint32_t> emask;
    emask.reserve(F.size());
    for (int e : F)
      emask.push_back((1u << bit[g.edges[e].u]) | (1u << bit[g.edges[e].v]));
    for (std::uint64_t mask = 0; mask < (1ull << tn); ++mask) {
      long long count = 0;
      for (std::uint32_t em : emask)
        if ((mask & em) == em) ++count;
      long long size = __builtin_popcountll(mask);
      ++sweep.checked;
      if (!squared_leq(count, 2 * k, size)) sweep.all_pass = false;
    }
    return sweep;
  }

  std::uint64_t state = seed;
  for (int trial = 0; trial < samples; ++trial) {
    std::vector<int> subset;
    for (int v : touched)
      if (splitmix64(state) & 1) subset.push_back(v);
    ++sweep.checked;
    if (!check_subset_bound(g, F, subset, k)) sweep.all_pass = false;
  }
  return sweep;
}

bool subsequence_budget_hypotheses(const Instance& dg, const Ordering& ord,
                                   const std::vector<int>& subset,
                                   long long k) {
  std::vector<int> sub = subset;
  for (int v : sub)
    if (v < 0 || v >= dg.n || ord.position[v] < 0) return false;
  std::sort(sub.begin(), sub.end(), [&ord](int a, int b) {
    return ord.position[a] < ord.position[b];
  });
  const int len = static_cast<int>(sub.size());
  if (len <= 1) return true;
  std::vector<int> subpos(dg.n, -1);
  for (int i = 0; i < len; ++i) subpos[sub[i]] = i;

  std::vector<long long> out_delta(len + 1, 0);
  for (const Edge& e : dg.edges) {
    int a = subpos[e.u], b = subpos[e.v];
    if (a < 0 || b < 0) continue;  // not induced
    if (a >= b) return false;      // an arc entering a prefix of the subsequence
    out_delta[a + 1] += 1;
    out_delta[std::min(b, len - 1) + 1] -= 1;
  }
  long long run = 0;
  for (int i = 1; i <= len - 1; ++i) {
    run += out_delta[i];
    if (run > k) return false;
  }
  return true;
}

LengthProfile length_budget(const Instance& dg, const Ordering& ord) {
  LengthProfile prof;
  const int len = static_cast<int>(ord.sequence.size());
  for (const Edge& e : dg.edges) {
    int a = ord.position[e.u], b = ord.position[e.v];
    if (a < 0 || b < 0 || b - a <= 0)
      throw StructureError("edge not forward under the ordering");
    prof.edge_length.push_back(b - a);
    prof.total += b - a;
  }
  // the same sum prefix-wise: an edge of length l leaves exactly l prefixes
  std::vector<long long> out_delta(len + 1, 0);
  for (const Edge& e : dg.edges) {
    int a = ord.position[e.u], b = ord.position[e.v];
    out_delta[a + 1] += 1;
    out_delta[std::min(b, len - 1) + 1] -= 1;
  }
  long long run = 0;
  for (int i = 1; i <= len - 1; ++i) {
    run += out_delta[i];
    prof.prefix_out_total += run;
  }
  prof.budget = static_cast<long long>(dg.k) * (len - 1);
  if (prof.total != prof.prefix_out_total)
    throw StructureError("length double-counting identity broken");
  if (prof.total > prof.budget)
    throw StructureError("total length exceeds the k(n-1) budget");
  return prof;
}

std::pair<long long, long long> closed_forms(long long max_len, long long n) {
  if (max_len < 1 || max_len > n - 1)
    throw std::invalid_argument("need 1 <= max_len <= n-1");
  long long count = 0, length = 0;
  for (long long j = 1; j <= max_len; ++j) {
    count += n - j;
    length += j * (n - j);
  }
  return {count, length};
}

long long max_edges_under_budget(long long k, long long n) {
  if (k < 1 || n < 2) throw std::invalid_argument("need k >= 1 and n >= 2");
  const long long budget = k * n;
  long long widest = 0, used_length = 0, count = 0;
  while (widest + 1 <= n - 1) {
    long long j = widest + 1;
    if (used_length + j * (n - j) > budget) break;
    used_length += j * (n - j);
    count += n - j;
    widest = j;
  }
  long long extra = 0;
  if (widest + 1 <= n - 1) {
    extra = (budget - used_length) / (widest + 1);
    extra = std::min(extra, n - (widest + 1));
  }
  long long m = count + extra;
  if (!squared_leq(m, 2 * k, n))
    throw StructureError("greedy maximum breaks the sqrt(2k)n bound");
  return m;
}

}  // namespace kedp
