#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "ssf/certify.h"
#include "ssf/gen.h"
#include "ssf/reductions.h"

using namespace ssf;

namespace {

// five nodes a..e with edges ab, bc, bd, cd, de: maximum matching 2
MatchingInstance five_node_instance() {
  return MatchingInstance::cardinality(
      5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

bool matching_feasible(const MatchingInstance& inst,
                       const std::vector<Cap>& h) {
  std::vector<Cap> deg(inst.n, 0);
  for (size_t e = 0; e < inst.edges.size(); ++e) {
    if (h[e] < inst.u0[e] || h[e] > inst.u[e]) return false;
    deg[inst.edges[e].first] += h[e];
    deg[inst.edges[e].second] += h[e];
  }
  for (int v = 0; v < inst.n; ++v)
    if (deg[v] < inst.b0[v] || deg[v] > inst.b[v]) return false;
  return true;
}

}  // namespace

TEST_CASE("five-node instance reduces to the expected network") {
  auto [bn, bm] = matching_to_network(five_node_instance());
  CHECK(bn.net.node_count == 12);
  CHECK(bn.net.arc_count() == 20);  // 10 node arcs + 10 edge arcs
  CHECK(validate_network(bn.net).empty());
  CHECK(oracle_max_isflow(bn.net) == 4);

  auto f = oracle_max_isflow_witness(bn.net);
  auto h = flow_to_matching(bn, f, bm);
  CHECK(matching_feasible(five_node_instance(), h));
  CHECK(std::accumulate(h.begin(), h.end(), Cap{0}) == 2);
}

TEST_CASE("single edge and triangle instances") {
  auto [bn1, bm1] = matching_to_network(MatchingInstance::cardinality(2, {{0, 1}}));
  CHECK(oracle_max_isflow(bn1.net) == 2);
  auto h1 = flow_to_matching(bn1, oracle_max_isflow_witness(bn1.net), bm1);
  CHECK(h1 == std::vector<Cap>{1});

  auto [bn3, bm3] = matching_to_network(
      MatchingInstance::cardinality(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(oracle_max_isflow(bn3.net) == 2);
  auto h3 = flow_to_matching(bn3, oracle_max_isflow_witness(bn3.net), bm3);
  CHECK(std::accumulate(h3.begin(), h3.end(), Cap{0}) == 1);
}

TEST_CASE("bad bounds are rejected") {
  auto inst = MatchingInstance::cardinality(2, {{0, 1}});
  SUBCASE("edge lower above upper") {
    inst.u0[0] = 2;
    CHECK_THROWS_AS(matching_to_network(inst), std::invalid_argument);
  }
  SUBCASE("node lower above upper") {
    inst.b0[0] = 3;
    CHECK_THROWS_AS(matching_to_network(inst), std::invalid_argument);
  }
}

TEST_CASE("zero lower bounds eliminate to an equivalent network") {
  auto [bn, bm] = matching_to_network(five_node_instance());
  auto elim = eliminate_lower_bounds(bn);
  CHECK(elim.extra_arcs.empty());
  REQUIRE(elim.net.arc_count() == bn.net.arc_count());
  for (int i = 0; i < bn.net.arc_count(); ++i) {
    int c = elim.carrier[i];
    CHECK(elim.net.arcs[c].tail == bn.net.arcs[i].tail);
    CHECK(elim.net.arcs[c].head == bn.net.arcs[i].head);
    CHECK(elim.net.arcs[c].cap == bn.net.arcs[i].cap);
  }
  CHECK(oracle_max_isflow(elim.net) == oracle_max_isflow(bn.net));
}

TEST_CASE("a forced unit arc saturates its detours") {
  BoundedNetwork bn;
  bn.net.node_count = 4;
  bn.net.add_arc_pair(0, 2, 1);  // forced: lower = upper = 1
  bn.net.add_arc_pair(2, 1, 1);
  bn.lower = {1, 1, 0, 0};
  auto elim = eliminate_lower_bounds(bn);
  CHECK(validate_network(elim.net).empty());
  CHECK(elim.extra_arcs.size() == 4);

  auto f = oracle_max_isflow_witness(elim.net);
  REQUIRE(elim.feasible(f));
  for (int a : elim.extra_arcs) CHECK(f.on_arc[a] == elim.net.arcs[a].cap);
  auto induced = elim.induce(bn.net, f);
  CHECK(verify_isflow(bn.net, induced).empty());
  for (int i = 0; i < bn.net.arc_count(); ++i)
    CHECK(induced.on_arc[i] >= bn.lower[i]);
  CHECK(induced.value == 2);
}

TEST_CASE("perfect matching on a triangle is infeasible") {
  auto inst = MatchingInstance::cardinality(3, {{0, 1}, {1, 2}, {0, 2}});
  inst.b0 = {1, 1, 1};  // perfect: every node must be covered
  auto [bn, bm] = matching_to_network(inst);
  auto elim = eliminate_lower_bounds(bn);
  OracleBudget wide{10, 40, 1};
  auto f = oracle_max_isflow_witness(elim.net, wide);
  CHECK(!elim.feasible(f));
}

TEST_CASE("unit splitting") {
  SkewSymmetricNetwork net;
  net.node_count = 4;
  net.add_arc_pair(0, 2, 3);
  net.add_arc_pair(2, 1, 2);
  auto us = unit_split(net);
  CHECK(validate_network(us.net).empty());
  CHECK(us.net.arc_count() == 10);
  for (const Arc& a : us.net.arcs) CHECK(a.cap == 1);
  for (int i = 0; i < us.net.arc_count(); ++i) {
    CHECK(us.net.arcs[i].tail == net.arcs[us.orig[i]].tail);
    CHECK(us.net.arcs[i].head == net.arcs[us.orig[i]].head);
  }
  CHECK(oracle_max_isflow(us.net) == oracle_max_isflow(net));

  SUBCASE("all-unit input is unchanged") {
    SkewSymmetricNetwork unit;
    unit.node_count = 4;
    unit.add_arc_pair(0, 2, 1);
    unit.add_arc_pair(2, 1, 1);
    auto us2 = unit_split(unit);
    REQUIRE(us2.net.arc_count() == unit.arc_count());
    for (int i = 0; i < unit.arc_count(); ++i) CHECK(us2.orig[i] == i);
  }
  SUBCASE("declared-unbounded arcs are rejected") {
    CHECK_THROWS_AS(unit_split(net, 3), std::invalid_argument);
  }
}

TEST_CASE("random instances match the brute-force matching value") {
  Rng rng(1122334455);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);  // up to 5 nodes
    int e = 1 + static_cast<int>(rng() % 6);
    auto edges = gen_random_graph(n, e, rng);
    if (edges.empty()) continue;
    auto inst = MatchingInstance::cardinality(n, edges);
    auto [bn, bm] = matching_to_network(inst);
    Cap flow = oracle_max_isflow(bn.net);
    int match = oracle_max_matching(n, edges);
    CHECK(flow == 2 * match);
    auto f = oracle_max_isflow_witness(bn.net);
    CHECK(f.value % 2 == 0);
    auto h = flow_to_matching(bn, f, bm);
    CHECK(matching_feasible(inst, h));
    CHECK(std::accumulate(h.begin(), h.end(), Cap{0}) == match);
  }
}
