// Command line for the min-power disjoint-paths toolkit.
//
// Exit codes: 0 ok, 2 unreadable/invalid input, 3 infeasible demand,
// 4 a verified bound failed, 5 oracle limit exceeded.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "kedp/approx.hpp"
#include "kedp/exact.hpp"
#include "kedp/extremal.hpp"
#include "kedp/generators.hpp"
#include "kedp/minimal.hpp"

using namespace kedp;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBound = 4;
constexpr int kExitOracle = 5;

std::string to_string_i128(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

std::string format_prob(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", p);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << data;
}

Instance load_instance(const std::string& path, bool undirected_only) {
  Instance g = parse_instance(read_file(path));
  if (undirected_only && g.directed)
    throw std::invalid_argument(
        "this command expects an undirected instance");
  return g;
}

void print_instance_header(std::ostream& os, const Instance& g) {
  os << "instance n=" << g.n << " m=" << g.edges.size() << " k=" << g.k
     << " s=" << g.s << " t=" << g.t << "\n";
}

void print_edge_set(std::ostream& os, const Instance& g, const EdgeSet& F) {
  os << "edges";
  for (int e : F) os << " " << e;
  os << "\n";
  for (int e : F)
    os << "edge " << e << " " << g.edges[e].u << " " << g.edges[e].v << " "
       << g.edges[e].cost << "\n";
}

void print_paths(std::ostream& os, const Instance& g, const PathSet& ps) {
  for (int i = 0; i < ps.k; ++i) {
    os << "path " << i;
    for (int v : path_nodes(g, ps.paths[i])) os << " " << v;
    os << "\n";
  }
}

// solve -> prune -> orient -> order -> verify -> bounds; shared by the
// verify command and the experiment rows.
struct PipelineResult {
  Solution alg;
  EdgeSet pruned;
  Cost pruned_power = 0;
  Cost pruned_cost = 0;
  bool minimal = false;
  OrientedGraph oriented;
  Ordering ordering;
  OrderingReport order_report;
  LengthProfile lengths;
  bool power_bound_ok = false;
  bool density_bound_ok = false;
  SubsetSweep subset;
  bool routes_agree = true;
  bool weighted_ok = true;
  int weight_trials = 0;

  bool all_ok() const {
    return minimal && order_report.pass && power_bound_ok &&
           density_bound_ok && subset.all_pass && routes_agree && weighted_ok;
  }
};

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PipelineResult run_pipeline(const Instance& g, int subset_cap, int samples,
                            int weight_trials) {
  PipelineResult r;
  r.alg = approximate_min_power_kedp(g);
  r.pruned = prune_to_minimal(g, r.alg.edges);
  r.pruned_power = power_cost(g, r.pruned);
  r.pruned_cost = total_cost(g, r.pruned);
  r.minimal = is_minimal(g, r.pruned);
  PathSet paths = k_disjoint_paths(g, r.pruned);
  r.oriented = orient_minimal(g, r.pruned, paths);
  r.ordering = compute_ordering(r.oriented.digraph);
  r.order_report = verify_ordering(r.oriented.digraph, r.ordering);
  r.lengths = length_budget(r.oriented.digraph, r.ordering);
  r.power_bound_ok = check_power_bound(g, r.pruned, g.k);
  std::vector<int> touched = touched_nodes(g, r.pruned);
  r.density_bound_ok =
      squared_leq(static_cast<Cost>(r.pruned.size()), 2LL * g.k,
                  static_cast<Cost>(touched.size()));
  r.subset = sweep_subset_bound(g, r.pruned, g.k, subset_cap, samples);

  // the two routes to the subset bound must agree: direct counting on the
  // undirected graph vs the ordered-digraph hypotheses plus the greedy cap
  std::uint64_t state = 1;
  for (int trial = 0; trial < 16; ++trial) {
    std::vector<int> subset;
    for (int v : touched)
      if (splitmix64(state) & 1) subset.push_back(v);
    bool direct = check_subset_bound(g, r.pruned, subset, g.k);
    bool oriented_route = check_subset_bound(
        r.oriented.digraph, all_edges(r.oriented.digraph), subset, g.k);
    bool hypotheses =
        subsequence_budget_hypotheses(r.oriented.digraph, r.ordering, subset,
                                      g.k);
    if (direct != oriented_route || !hypotheses) r.routes_agree = false;
  }

  r.weight_trials = weight_trials;
  for (int trial = 0; trial < weight_trials; ++trial) {
    std::vector<Cost> weight(g.n, 0);
    for (int v : touched) weight[v] = static_cast<Cost>(splitmix64(state) % 101);
    if (!check_weighted_inequality(g, r.pruned, weight, g.k))
      r.weighted_ok = false;
  }
  return r;
}

void print_pipeline(std::ostream& os, const Instance& g,
                    const PipelineResult& r) {
  print_instance_header(os, g);
  os << "feasible 1\n";
  os << "alg_power " << r.alg.power << " alg_cost " << r.alg.cost << "\n";
  os << "pruned_size " << r.pruned.size() << " pruned_power "
     << r.pruned_power << " pruned_cost " << r.pruned_cost << "\n";
  os << "minimal " << (r.minimal ? 1 : 0) << "\n";
  os << "ordering_ok " << (r.order_report.pass ? 1 : 0) << "\n";
  if (!r.order_report.pass)
    os << "ordering_failure " << r.order_report.failure << "\n";
  os << "prefixes " << r.order_report.prefixes.size() << "\n";
  os << "length_total " << r.lengths.total << " length_budget "
     << r.lengths.budget << "\n";
  os << "power_bound_ok " << (r.power_bound_ok ? 1 : 0) << "\n";
  os << "density_bound_ok " << (r.density_bound_ok ? 1 : 0) << "\n";
  os << "subset_bound_ok " << (r.subset.all_pass ? 1 : 0) << " checked "
     << r.subset.checked << " exhaustive " << (r.subset.exhaustive ? 1 : 0)
     << "\n";
  os << "subset_routes_agree " << (r.routes_agree ? 1 : 0) << "\n";
  os << "weighted_ok " << (r.weighted_ok ? 1 : 0) << " trials "
     << r.weight_trials << "\n";
  os << "verdict " << (r.all_ok() ? "pass" : "FAIL") << "\n";
}

// ---------------------------------------------------------------------------
// experiment
// ---------------------------------------------------------------------------

struct ExperimentConfig {
  std::uint64_t seed_lo = 1, seed_hi = 100;
  int n_lo = 4, n_hi = 7;
  int k_lo = 1, k_hi = 3;
  double edge_prob = 0.6;
  Cost cost_lo = 1, cost_hi = 20;
  bool oracle = false;
  int max_oracle_edges = 14;
  int subset_cap = 12;
  int samples = 64;
  int weight_trials = 8;
};

ExperimentConfig parse_config(const std::string& text) {
  json j = json::parse(text);
  ExperimentConfig c;
  auto get = [&j](const char* key, auto fallback) {
    using T = decltype(fallback);
    return j.contains(key) ? j.at(key).get<T>() : fallback;
  };
  c.seed_lo = get("seed_lo", c.seed_lo);
  c.seed_hi = get("seed_hi", c.seed_hi);
  c.n_lo = get("n_lo", c.n_lo);
  c.n_hi = get("n_hi", c.n_hi);
  c.k_lo = get("k_lo", c.k_lo);
  c.k_hi = get("k_hi", c.k_hi);
  c.edge_prob = get("edge_prob", c.edge_prob);
  c.cost_lo = get("cost_lo", c.cost_lo);
  c.cost_hi = get("cost_hi", c.cost_hi);
  c.oracle = get("oracle", c.oracle);
  c.max_oracle_edges = get("max_oracle_edges", c.max_oracle_edges);
  c.subset_cap = get("subset_cap", c.subset_cap);
  c.samples = get("samples", c.samples);
  c.weight_trials = get("weight_trials", c.weight_trials);
  if (c.seed_hi < c.seed_lo || c.n_hi < c.n_lo || c.k_hi < c.k_lo)
    throw std::invalid_argument("empty range in config");
  return c;
}

struct ExperimentRecord {
  std::uint64_t seed = 0;
  int n = 0, m = 0, k = 0;
  bool feasible = false;
  bool has_alg = false;
  Cost alg_power = 0, alg_cost = 0;
  bool has_opt = false;
  Cost opt_power = 0;
  bool has_bounds = false;
  bool power_bound_ok = false, subset_bound_ok = false, ordering_ok = false;
  long long wall_ms = 0;

  std::string csv() const {
    std::ostringstream os;
    os << seed << "," << n << "," << m << "," << k << "," << (feasible ? 1 : 0)
       << ",";
    if (has_alg) os << alg_power;
    os << ",";
    if (has_alg) os << alg_cost;
    os << ",";
    if (has_opt) os << opt_power;
    os << ",";
    if (has_opt) os << alg_power;  // ratio_num
    os << ",";
    if (has_opt) os << opt_power;  // ratio_den
    os << ",";
    if (has_bounds) os << (power_bound_ok ? 1 : 0);
    os << ",";
    if (has_bounds) os << (subset_bound_ok ? 1 : 0);
    os << ",";
    if (has_bounds) os << (ordering_ok ? 1 : 0);
    os << "," << wall_ms;
    return os.str();
  }
};

ExperimentRecord run_record(const ExperimentConfig& c, std::uint64_t seed,
                            bool timing) {
  auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.seed = seed;

  std::uint64_t state = seed;
  RandomParams rp;
  rp.seed = seed;
  rp.n = c.n_lo + static_cast<int>(splitmix64(state) %
                                   static_cast<std::uint64_t>(c.n_hi - c.n_lo + 1));
  rp.k = c.k_lo + static_cast<int>(splitmix64(state) %
                                   static_cast<std::uint64_t>(c.k_hi - c.k_lo + 1));
  rp.edge_prob = c.edge_prob;
  rp.cost_lo = c.cost_lo;
  rp.cost_hi = c.cost_hi;
  Instance g = random_instance(rp);
  rec.n = g.n;
  rec.m = static_cast<int>(g.edges.size());
  rec.k = g.k;

  rec.feasible = max_flow_value(g, all_edges(g)) >= g.k;
  if (rec.feasible) {
    PipelineResult pipe =
        run_pipeline(g, c.subset_cap, c.samples, c.weight_trials);
    rec.has_alg = true;
    rec.alg_power = pipe.alg.power;
    rec.alg_cost = pipe.alg.cost;
    rec.has_bounds = true;
    rec.power_bound_ok = pipe.power_bound_ok;
    rec.subset_bound_ok = pipe.subset.all_pass && pipe.routes_agree;
    rec.ordering_ok = pipe.order_report.pass && pipe.minimal;
    if (c.oracle && rec.m <= c.max_oracle_edges) {
      OracleLimits lim;
      lim.max_edges = c.max_oracle_edges;
      rec.has_opt = true;
      rec.opt_power = exact_min_power(g, lim).power;
    }
  }
  if (timing) {
    auto stop = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      stop - start)
                      .count();
  }
  return rec;
}

int cmd_experiment(const std::string& config_path, const std::string& out,
                   int jobs, bool timing, const std::string& format) {
  ExperimentConfig cfg = parse_config(read_file(config_path));
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = cfg.seed_lo; s <= cfg.seed_hi; ++s) seeds.push_back(s);

  std::vector<ExperimentRecord> rows(seeds.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= seeds.size() || failed.load()) return;
      try {
        rows[i] = run_record(cfg, seeds[i], timing);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed.store(true);
        error = e.what();
        return;
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw std::runtime_error("experiment row failed: " + error);

  std::sort(rows.begin(), rows.end(),
            [](const ExperimentRecord& a, const ExperimentRecord& b) {
              return std::tuple(a.seed, a.n, a.m, a.k) <
                     std::tuple(b.seed, b.n, b.m, b.k);
            });

  long long feasible = 0, violations = 0, oracle_rows = 0;
  Cost best_num = 0, best_den = 1;
  bool have_ratio = false;
  for (const ExperimentRecord& r : rows) {
    feasible += r.feasible;
    if (r.has_bounds &&
        !(r.power_bound_ok && r.subset_bound_ok && r.ordering_ok))
      ++violations;
    if (r.has_opt) {
      ++oracle_rows;
      if (!have_ratio ||
          fraction_gt(r.alg_power, r.opt_power, best_num, best_den)) {
        best_num = r.alg_power;
        best_den = r.opt_power;
        have_ratio = true;
      }
    }
  }

  std::ostringstream os;
  if (format == "csv") {
    os << "# kedp-experiment-csv v1\n";
    os << "seed,n,m,k,feasible,alg_power,alg_cost,opt_power,ratio_num,"
          "ratio_den,power_bound_ok,subset_bound_ok,ordering_ok,wall_time_ms\n";
    for (const ExperimentRecord& r : rows) os << r.csv() << "\n";
    os << "# summary instances=" << rows.size() << " feasible=" << feasible
       << " oracle_rows=" << oracle_rows << " max_ratio=";
    if (have_ratio)
      os << best_num << "/" << best_den;
    else
      os << "na";
    os << " bound_violations=" << violations << "\n";
  } else {
    os << "instances " << rows.size() << "\n";
    os << "feasible " << feasible << "\n";
    os << "oracle_rows " << oracle_rows << "\n";
    os << "max_ratio ";
    if (have_ratio)
      os << best_num << " " << best_den;
    else
      os << "na";
    os << "\n";
    os << "bound_violations " << violations << "\n";
  }
  write_output(out, os.str());
  return violations == 0 ? kExitOk : kExitBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"min-power k edge-disjoint st-paths toolkit"};
  app.require_subcommand(1);

  std::string input, output, config;
  bool oracle = false;
  int max_oracle_edges = 20;
  int subset_cap = 20, samples = 256, weight_trials = 8;
  int jobs = 1;
  bool timing = false;
  std::string format = "csv";

  auto* solve = app.add_subcommand("solve", "approximate min-power k paths");
  solve->add_option("-i,--input", input)->required();
  solve->add_option("-o,--output", output);
  solve->add_flag("--oracle", oracle, "also run the exact oracle");
  solve->add_option("--max-oracle-edges", max_oracle_edges);

  auto* exact = app.add_subcommand("exact", "exhaustive min-power optimum");
  exact->add_option("-i,--input", input)->required();
  exact->add_option("-o,--output", output);
  exact->add_option("--max-oracle-edges", max_oracle_edges);

  auto* prune = app.add_subcommand("prune", "minimal feasible subgraph");
  prune->add_option("-i,--input", input)->required();
  prune->add_option("-o,--output", output);

  auto* order = app.add_subcommand("order", "prefix-cut node ordering");
  order->add_option("-i,--input", input)->required();
  order->add_option("-o,--output", output);

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  int layers = 2, interior = 12;
  bool length_costs = false;
  auto* gen_tight = gen->add_subcommand("tight", "stacked extremal example");
  gen_tight->add_option("--layers", layers)->required();
  gen_tight->add_option("--interior", interior)->required();
  gen_tight->add_flag("--length-costs", length_costs,
                      "cost = jump length instead of 1");
  gen_tight->add_option("-o,--output", output);
  RandomParams rnd;
  bool have_m = false;
  int rnd_m = 0;
  auto* gen_random = gen->add_subcommand("random", "seeded random instance");
  gen_random->add_option("--seed", rnd.seed)->required();
  gen_random->add_option("--n", rnd.n)->required();
  gen_random->add_option("--p", rnd.edge_prob);
  gen_random->add_option("--m", rnd_m)->each([&have_m](const std::string&) {
    have_m = true;
  });
  gen_random->add_option("--k", rnd.k)->required();
  gen_random->add_option("--cost-lo", rnd.cost_lo);
  gen_random->add_option("--cost-hi", rnd.cost_hi);
  gen_random->add_option("-o,--output", output);

  auto* verify = app.add_subcommand(
      "verify", "full pipeline with every bound check");
  verify->add_option("-i,--input", input)->required();
  verify->add_option("-o,--output", output);
  verify->add_option("--subset-cap", subset_cap);
  verify->add_option("--samples", samples);
  verify->add_option("--weight-trials", weight_trials);

  auto* experiment = app.add_subcommand("experiment", "batch sweep to CSV");
  experiment->add_option("-c,--config", config)->required();
  experiment->add_option("-o,--output", output);
  experiment->add_option("--jobs", jobs);
  experiment->add_flag("--timing", timing,
                       "measure wall time (breaks byte-stable reruns)");
  experiment->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      Instance g = load_instance(input, true);
      Solution sol = approximate_min_power_kedp(g);
      std::ostringstream os;
      print_instance_header(os, g);
      print_edge_set(os, g, sol.edges);
      print_paths(os, g, sol.witness);
      os << "power " << sol.power << "\n";
      os << "cost " << sol.cost << "\n";
      os << "guarantee_inputs power_sq="
         << to_string_i128(static_cast<__int128>(sol.power) * sol.power)
         << " eight_k=" << 8LL * g.k << "\n";
      if (oracle) {
        OracleLimits lim;
        lim.max_edges = max_oracle_edges;
        Cost opt = exact_min_power(g, lim).power;
        os << "opt_power " << opt << "\n";
        os << "ratio " << sol.power << " " << opt << "\n";
        os << "guarantee_ok " << (guarantee_check(g.k, sol.power, opt) ? 1 : 0)
           << "\n";
      }
      write_output(output, os.str());
      return kExitOk;
    }
    if (exact->parsed()) {
      Instance g = load_instance(input, true);
      OracleLimits lim;
      lim.max_edges = max_oracle_edges;
      Solution sol = exact_min_power(g, lim);
      std::ostringstream os;
      print_instance_header(os, g);
      print_edge_set(os, g, sol.edges);
      os << "power " << sol.power << "\n";
      os << "cost " << sol.cost << "\n";
      write_output(output, os.str());
      return kExitOk;
    }
    if (prune->parsed()) {
      Instance g = load_instance(input, true);
      EdgeSet pruned = prune_to_minimal(g, all_edges(g));
      std::ostringstream os;
      print_instance_header(os, g);
      os << "pruned_size " << pruned.size() << "\n";
      print_edge_set(os, g, pruned);
      os << "power " << power_cost(g, pruned) << "\n";
      os << "cost " << total_cost(g, pruned) << "\n";
      os << "minimal " << (is_minimal(g, pruned) ? 1 : 0) << "\n";
      os << "touched " << touched_nodes(g, pruned).size() << "\n";
      write_output(output, os.str());
      return kExitOk;
    }
    if (order->parsed()) {
      Instance g = parse_instance(read_file(input));
      Instance dg;
      if (g.directed) {
        if (!is_minimal(g, all_edges(g)))
          throw std::invalid_argument(
              "order expects a minimal directed instance");
        dg = g;
      } else {
        EdgeSet pruned = prune_to_minimal(g, all_edges(g));
        PathSet paths = k_disjoint_paths(g, pruned);
        dg = orient_minimal(g, pruned, paths).digraph;
      }
      Ordering ord = compute_ordering(dg);
      OrderingReport rep = verify_ordering(dg, ord);
      std::ostringstream os;
      os << "order";
      for (int v : ord.sequence) os << " " << v;
      os << "\n";
      for (const PrefixStat& st : rep.prefixes)
        os << "prefix " << st.index << " out " << st.out_degree << " in "
           << st.in_degree << "\n";
      os << "ordering_ok " << (rep.pass ? 1 : 0) << "\n";
      write_output(output, os.str());
      return rep.pass ? kExitOk : kExitBound;
    }
    if (gen_tight->parsed()) {
      TightExample ex = build_tight_example({layers, interior}, !length_costs);
      std::ostringstream os;
      os << "# kedp gen tight layers=" << layers << " interior=" << interior
         << " costs=" << (length_costs ? "length" : "unit") << "\n";
      os << "# k=" << ex.k << " n=" << ex.graph.n << " m="
         << ex.graph.edges.size() << " nominal_n=" << ex.nominal_n
         << " nominal_m=" << ex.nominal_m << " delta_n="
         << (ex.graph.n - ex.nominal_n) << " delta_m="
         << (static_cast<long long>(ex.graph.edges.size()) - ex.nominal_m)
         << " subdivided=" << ex.subdivided << "\n";
      os << serialize_instance(ex.graph);
      write_output(output, os.str());
      return kExitOk;
    }
    if (gen_random->parsed()) {
      if (have_m) rnd.m = rnd_m;
      Instance g = random_instance(rnd);
      std::ostringstream os;
      os << "# kedp gen random seed=" << rnd.seed << " n=" << rnd.n;
      if (have_m)
        os << " m=" << rnd_m;
      else
        os << " p=" << format_prob(rnd.edge_prob);
      os << " k=" << rnd.k << " cost=[" << rnd.cost_lo << "," << rnd.cost_hi
         << "]\n";
      os << serialize_instance(g);
      write_output(output, os.str());
      return kExitOk;
    }
    if (verify->parsed()) {
      Instance g = load_instance(input, true);
      PipelineResult r = run_pipeline(g, subset_cap, samples, weight_trials);
      std::ostringstream os;
      print_pipeline(os, g, r);
      write_output(output, os.str());
      return r.all_ok() ? kExitOk : kExitBound;
    }
    if (experiment->parsed())
      return cmd_experiment(config, output, jobs, timing, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const OracleLimit& e) {
    std::cerr << "oracle limit: " << e.what() << "\n";
    return kExitOracle;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
