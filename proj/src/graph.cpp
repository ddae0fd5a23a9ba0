#include "kedp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace kedp {

void validate_instance(const Instance& g) {
  if (g.n < 2) throw std::invalid_argument("instance needs at least 2 nodes");
  if (g.s < 0 || g.s >= g.n || g.t < 0 || g.t >= g.n)
    throw std::invalid_argument("terminal out of range");
  if (g.s == g.t) throw std::invalid_argument("s and t must differ");
  if (g.k < 1) throw std::invalid_argument("k must be positive");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.cost < 0) throw std::invalid_argument("negative cost");
    if (!g.directed && e.u > e.v)
      throw std::invalid_argument("undirected edge not in canonical order");
    if (!seen.insert({e.u, e.v}).second)
      throw std::invalid_argument("parallel edge");
  }
}

void validate_edge_set(const Instance& g, const EdgeSet& F) {
  std::vector<bool> used(g.edges.size(), false);
  for (int e : F) {
    if (e < 0 || e >= static_cast<int>(g.edges.size()))
      throw std::invalid_argument("edge index out of range");
    if (used[e]) throw std::invalid_argument("duplicate edge index");
    used[e] = true;
  }
}

EdgeSet all_edges(const Instance& g) {
  EdgeSet F(g.edges.size());
  for (int i = 0; i < static_cast<int>(F.size()); ++i) F[i] = i;
  return F;
}

std::vector<int> touched_nodes(const Instance& g, const EdgeSet& F) {
  std::vector<bool> in(g.n, false);
  in[g.s] = in[g.t] = true;
  for (int e : F) {
    in[g.edges[e].u] = true;
    in[g.edges[e].v] = true;
  }
  std::vector<int> nodes;
  for (int v = 0; v < g.n; ++v)
    if (in[v]) nodes.push_back(v);
  return nodes;
}

static Cost narrow_sum(__int128 acc) {
  if (acc > std::numeric_limits<Cost>::max())
    throw std::overflow_error("cost sum exceeds 64 bits");
  return static_cast<Cost>(acc);
}

Cost power_cost(const Instance& g, const EdgeSet& F) {
  std::vector<Cost> peak(g.n, 0);
  for (int e : F) {
    const Edge& ed = g.edges[e];
    peak[ed.u] = std::max(peak[ed.u], ed.cost);
    peak[ed.v] = std::max(peak[ed.v], ed.cost);
  }
  __int128 acc = 0;
  for (Cost p : peak) acc += p;
  return narrow_sum(acc);
}

Cost total_cost(const Instance& g, const EdgeSet& F) {
  __int128 acc = 0;
  for (int e : F) acc += g.edges[e].cost;
  return narrow_sum(acc);
}

Assignment assignment_from_edges(const Instance& g, const EdgeSet& F) {
  Assignment a(g.n, 0);
  for (int e : F) {
    const Edge& ed = g.edges[e];
    a[ed.u] = std::max(a[ed.u], ed.cost);
    a[ed.v] = std::max(a[ed.v], ed.cost);
  }
  return a;
}

EdgeSet activated_edges(const Instance& g, const Assignment& a) {
  if (static_cast<int>(a.size()) != g.n)
    throw std::invalid_argument("assignment size mismatch");
  EdgeSet F;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const Edge& ed = g.edges[e];
    if (ed.cost <= std::min(a[ed.u], a[ed.v])) F.push_back(e);
  }
  return F;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tok;
  std::string t;
  while (ss >> t) tok.push_back(t);
  return tok;
}

long long parse_int(const std::string& tok, int line, const char* what) {
  long long value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, std::string("expected integer for ") + what +
                               ", got '" + tok + "'");
  return value;
}

int parse_node(const std::string& tok, int n, int line, const char* what) {
  long long v = parse_int(tok, line, what);
  if (v < 0 || v >= n)
    throw ParseError(line, std::string(what) + " " + tok + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance g;
  bool have_header = false;
  long long declared_m = 0;
  std::set<std::pair<int, int>> seen;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line(text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos));
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (!have_header) {
      size_t at = 0;
      if (tok[0] == "D") {
        g.directed = true;
        at = 1;
      }
      if (tok.size() - at != 5)
        throw ParseError(lineno, "header must be [D] n m k s t");
      long long n = parse_int(tok[at + 0], lineno, "n");
      declared_m = parse_int(tok[at + 1], lineno, "m");
      long long k = parse_int(tok[at + 2], lineno, "k");
      if (n < 2) throw ParseError(lineno, "need at least 2 nodes");
      if (declared_m < 0) throw ParseError(lineno, "negative edge count");
      if (k < 1) throw ParseError(lineno, "k must be positive");
      if (n > 1000000000 || declared_m > 1000000000 || k > 1000000000)
        throw ParseError(lineno, "header value out of range");
      g.n = static_cast<int>(n);
      g.k = static_cast<int>(k);
      g.s = parse_node(tok[at + 3], g.n, lineno, "s");
      g.t = parse_node(tok[at + 4], g.n, lineno, "t");
      if (g.s == g.t) throw ParseError(lineno, "s and t must differ");
      have_header = true;
      continue;
    }
    if (static_cast<long long>(g.edges.size()) == declared_m)
      throw ParseError(lineno, "more edge lines than declared");
    if (tok.size() != 3) throw ParseError(lineno, "edge line must be u v cost");
    int u = parse_node(tok[0], g.n, lineno, "u");
    int v = parse_node(tok[1], g.n, lineno, "v");
    long long c = parse_int(tok[2], lineno, "cost");
    if (c < 0) throw ParseError(lineno, "negative cost");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (!g.directed && u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw ParseError(lineno, "duplicate edge");
    g.edges.push_back({u, v, static_cast<Cost>(c)});
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (static_cast<long long>(g.edges.size()) != declared_m)
    throw ParseError(lineno,
                     "expected " + std::to_string(declared_m) + " edges, got " +
                         std::to_string(g.edges.size()));
  return g;
}

std::string serialize_instance(const Instance& g) {
  std::string out;
  if (g.directed) out += "D ";
  out += std::to_string(g.n) + " " + std::to_string(g.edges.size()) + " " +
         std::to_string(g.k) + " " + std::to_string(g.s) + " " +
         std::to_string(g.t) + "\n";
  for (const Edge& e : g.edges)
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           std::to_string(e.cost) + "\n";
  return out;
}

}  // namespace kedp
