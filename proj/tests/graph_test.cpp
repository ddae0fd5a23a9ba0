#include <doctest.h>

#include <random>

#include "kedp/graph.hpp"
#include "util.hpp"

using namespace kedp;
using testutil::make;

namespace {

// s--a--t with costs 3 and 4
Instance two_hop() { return make(3, {{0, 1, 3}, {1, 2, 4}}); }

}  // namespace

TEST_CASE("power of the empty set is zero") {
  Instance g = make(2, {{0, 1, 5}});
  CHECK(power_cost(g, {}) == 0);
  CHECK(total_cost(g, {}) == 0);
}

TEST_CASE("power counts both endpoints of a single edge") {
  Instance g = make(2, {{0, 1, 5}});
  CHECK(power_cost(g, {0}) == 10);
  CHECK(total_cost(g, {0}) == 5);
}

TEST_CASE("power of a two-hop path") {
  Instance g = two_hop();
  CHECK(power_cost(g, {0, 1}) == 11);  // 3 + max(3,4) + 4
  CHECK(total_cost(g, {0, 1}) == 7);
}

TEST_CASE("assignment from edges") {
  Instance g = two_hop();
  CHECK(assignment_from_edges(g, {}) == Assignment{0, 0, 0});
  CHECK(assignment_from_edges(g, {0, 1}) == Assignment{3, 4, 4});
  Instance single = make(4, {{0, 3, 5}}, 1, 0, 3);
  CHECK(assignment_from_edges(single, {0}) == Assignment{5, 0, 0, 5});
  Cost sum = 0;
  for (Cost a : assignment_from_edges(g, {0, 1})) sum += a;
  CHECK(sum == power_cost(g, {0, 1}));
}

TEST_CASE("activated edges") {
  Instance g = two_hop();
  CHECK(activated_edges(g, {0, 0, 0}).empty());
  CHECK(activated_edges(g, {3, 4, 4}) == EdgeSet{0, 1});
  // definitional round trip: F is a subset of what its assignment activates
  EdgeSet F{1};
  EdgeSet act = activated_edges(g, assignment_from_edges(g, F));
  for (int e : F) CHECK(std::find(act.begin(), act.end(), e) != act.end());
}

TEST_CASE("parse smallest instance") {
  Instance g = parse_instance("2 1 1 0 1\n0 1 5\n");
  CHECK(g.n == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.edges[0] == Edge{0, 1, 5});
  CHECK(g.k == 1);
  CHECK_FALSE(g.directed);
}

TEST_CASE("parse ignores comments and normalizes endpoint order") {
  Instance g = parse_instance("# generated\n3 2 1 0 2\n1 0 3\n# note\n1 2 4\n");
  CHECK(g.edges[0] == Edge{0, 1, 3});
  CHECK(g.edges[1] == Edge{1, 2, 4});
}

TEST_CASE("serialize then parse is the identity") {
  Instance g = two_hop();
  g.k = 1;
  CHECK(parse_instance(serialize_instance(g)) == g);
  Instance d = make(3, {{0, 1, 2}, {1, 2, 2}, {2, 0, 7}}, 2, 0, 2, true);
  CHECK(parse_instance(serialize_instance(d)) == d);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_instance("2 1 1 0\n0 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 2 1 0 1\n0 1 5\n1 0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 1 1 0 1\n0 0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 1 1 0 1\n0 2 5\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 1 1 0 1\n0 1 -5\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 1 1 1 1\n0 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_instance(""), ParseError);
  CHECK_THROWS_AS(parse_instance("2 2 1 0 1\n0 1 5\n"), ParseError);
  try {
    parse_instance("3 2 1 0 2\n0 1 5\n1 1 4\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("validate rejects broken instances") {
  CHECK_THROWS_AS(validate_instance(make(2, {{0, 0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_instance(make(2, {{0, 1, 1}, {0, 1, 2}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_instance(make(2, {{1, 0, 1}})),
                  std::invalid_argument);
  CHECK_NOTHROW(validate_instance(make(2, {{0, 1, 1}})));
}

TEST_CASE("serialize/parse round trip over random instances") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    RandomParams rp;
    rp.seed = rng();
    rp.n = 3 + static_cast<int>(rng() % 10);
    rp.edge_prob = 0.5;
    rp.cost_lo = 0;
    rp.cost_hi = 1000000007;
    rp.k = 1 + static_cast<int>(rng() % 4);
    Instance g = random_instance(rp);
    CHECK(parse_instance(serialize_instance(g)) == g);

    // directed variant with randomly flipped arcs
    Instance d = g;
    d.directed = true;
    for (Edge& e : d.edges)
      if (rng() % 2) std::swap(e.u, e.v);
    CHECK(parse_instance(serialize_instance(d)) == d);
  }
}

TEST_CASE("oversized header values are rejected") {
  CHECK_THROWS_AS(parse_instance("99999999999 1 1 0 1\n0 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 1 99999999999 0 1\n0 1 5\n"), ParseError);
}

TEST_CASE("power is at most twice the cost, and both are monotone") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 300; ++trial) {
    RandomParams rp;
    rp.seed = rng();
    rp.n = 4 + static_cast<int>(rng() % 6);
    rp.edge_prob = 0.5;
    rp.cost_lo = 0;
    rp.cost_hi = 30;
    Instance g = random_instance(rp);
    EdgeSet small, big;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      if (rng() % 2) big.push_back(e);
    }
    for (int e : big)
      if (rng() % 2) small.push_back(e);
    CHECK(power_cost(g, big) <= 2 * total_cost(g, big));
    CHECK(power_cost(g, small) <= power_cost(g, big));
    CHECK(total_cost(g, small) <= total_cost(g, big));
    Cost sum = 0;
    for (Cost a : assignment_from_edges(g, big)) sum += a;
    CHECK(sum == power_cost(g, big));
  }
}
