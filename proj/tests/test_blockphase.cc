#include <stdexcept>

#include "doctest.h"
#include "ssf/blockphase.h"
#include "ssf/certify.h"
#include "ssf/gen.h"
#include "ssf/regpath.h"

using namespace ssf;

namespace {

// structural checks on a path set: every path runs from its source to the
// sink, total usage respects capacities, and both paths of a pair carry
// the same weight by construction
std::vector<Cap> checked_flow(const MBPInstance& inst,
                              const BalancedPathSet& set) {
  auto path_ok = [&](const std::vector<int>& p, int from) {
    REQUIRE(!p.empty());
    int at = from;
    for (int a : p) {
      REQUIRE(a >= 0);
      REQUIRE(a < inst.arc_count());
      CHECK(inst.tail[a] == at);
      at = inst.head[a];
    }
    CHECK(at == inst.sink);
  };
  for (const GoodPair& gp : set.pairs) {
    CHECK(gp.alpha >= 1);
    path_ok(gp.path_z, gp.z);
    path_ok(gp.path_zm, gp.zm);
  }
  std::vector<Cap> f = path_set_flow(inst, set);
  for (int a = 0; a < inst.arc_count(); ++a) {
    Cap u = inst.cap.empty() ? 1 : inst.cap[a];
    CHECK(f[a] <= u);
  }
  // equal divergence at the two sources of each pair
  std::vector<Cap> div(inst.node_count, 0);
  for (int a = 0; a < inst.arc_count(); ++a) {
    div[inst.tail[a]] += f[a];
    div[inst.head[a]] -= f[a];
  }
  for (auto [z, zm] : inst.source_pairs) CHECK(div[z] == div[zm]);
  return f;
}

std::vector<Cap> remaining_caps(const MBPInstance& inst,
                                const std::vector<Cap>& f) {
  std::vector<Cap> rem(inst.arc_count());
  for (int a = 0; a < inst.arc_count(); ++a)
    rem[a] = (inst.cap.empty() ? 1 : inst.cap[a]) - f[a];
  return rem;
}

}  // namespace

TEST_CASE("a pair with disjoint routes is taken whole") {
  MBPInstance inst;
  inst.node_count = 3;
  inst.tail = {0, 1};
  inst.head = {2, 2};
  inst.sink = 2;
  inst.source_pairs = {{0, 1}};
  auto set = solve_mbp(inst);
  REQUIRE(set.pairs.size() == 1);
  CHECK(set.pairs[0].path_z == std::vector<int>{0});
  CHECK(set.pairs[0].path_zm == std::vector<int>{1});
  auto f = checked_flow(inst, set);
  CHECK(!oracle_mbp_good_pair(inst, remaining_caps(inst, f)));
}

TEST_CASE("a shared last arc forces an empty set") {
  MBPInstance inst;
  inst.node_count = 4;
  inst.tail = {0, 1, 2};
  inst.head = {2, 2, 3};
  inst.sink = 3;
  inst.source_pairs = {{0, 1}};
  CHECK(!oracle_mbp_good_pair(inst, {1, 1, 1}));
  auto set = solve_mbp(inst);
  CHECK(set.pairs.empty());
}

TEST_CASE("two pairs over a width-two bottleneck yield one good pair") {
  MBPInstance inst;
  inst.node_count = 6;
  inst.tail = {0, 1, 2, 3, 4, 4};
  inst.head = {4, 4, 4, 4, 5, 5};
  inst.sink = 5;
  inst.source_pairs = {{0, 1}, {2, 3}};
  auto set = solve_mbp(inst);
  REQUIRE(set.pairs.size() == 1);
  auto f = checked_flow(inst, set);
  CHECK(f[4] + f[5] == 2);
  CHECK(!oracle_mbp_good_pair(inst, remaining_caps(inst, f)));
}

TEST_CASE("a breakthrough routes through an earlier shrunk region") {
  // pair (0,1) must share arc 3 and is shrunk away; pair (2,3) then goes
  // through the complex node, entering it at the swallowed inner node 4
  MBPInstance inst;
  inst.node_count = 8;
  inst.tail = {0, 1, 4, 5, 6, 6, 2, 3};
  inst.head = {4, 5, 5, 6, 7, 7, 4, 6};
  inst.sink = 7;
  inst.source_pairs = {{0, 1}, {2, 3}};
  auto set = solve_mbp(inst);
  REQUIRE(set.pairs.size() == 1);
  CHECK(set.pairs[0].z == 2);
  CHECK(set.pairs[0].zm == 3);
  CHECK(set.pairs[0].path_z == std::vector<int>{6, 2, 3, 5});
  CHECK(set.pairs[0].path_zm == std::vector<int>{7, 4});
  auto f = checked_flow(inst, set);
  CHECK(!oracle_mbp_good_pair(inst, remaining_caps(inst, f)));
}

TEST_CASE("capacity bottlenecks set the pair weight") {
  SUBCASE("disjoint routes carry the smaller capacity") {
    MBPInstance inst;
    inst.node_count = 3;
    inst.tail = {0, 1};
    inst.head = {2, 2};
    inst.cap = {5, 7};
    inst.sink = 2;
    inst.source_pairs = {{0, 1}};
    auto set = solve_bbf(inst);
    REQUIRE(set.pairs.size() == 1);
    CHECK(set.pairs[0].alpha == 5);
    auto f = checked_flow(inst, set);
    CHECK(!oracle_mbp_good_pair(inst, remaining_caps(inst, f)));
  }
  SUBCASE("an arc shared inside a pair counts twice") {
    MBPInstance inst;
    inst.node_count = 4;
    inst.tail = {0, 1, 2};
    inst.head = {2, 2, 3};
    inst.cap = {4, 9, 9};
    inst.sink = 3;
    inst.source_pairs = {{0, 1}};
    auto set = solve_bbf(inst);
    REQUIRE(set.pairs.size() == 1);
    CHECK(set.pairs[0].alpha == 4);
    auto f = checked_flow(inst, set);
    CHECK(f[2] == 8);
    CHECK(!oracle_mbp_good_pair(inst, remaining_caps(inst, f)));
  }
}

TEST_CASE("instances are validated") {
  MBPInstance inst;
  inst.node_count = 3;
  inst.tail = {0, 1};
  inst.head = {2, 2};
  inst.sink = 2;
  inst.source_pairs = {{0, 1}};
  SUBCASE("node off every source-to-sink path") {
    inst.node_count = 4;  // node 3 is isolated
    CHECK_THROWS_AS(solve_mbp(inst), std::invalid_argument);
  }
  SUBCASE("entering arc on a source") {
    inst.tail.push_back(0);
    inst.head.push_back(1);
    CHECK_THROWS_AS(solve_mbp(inst), std::invalid_argument);
  }
  SUBCASE("cycle") {
    inst.node_count = 5;
    inst.tail.insert(inst.tail.end(), {2, 3, 4});
    inst.head.insert(inst.head.end(), {3, 4, 2});
    // make the cycle nodes sink-reachable so only acyclicity fails
    inst.tail.push_back(3);
    inst.head.push_back(2);
    CHECK_THROWS_AS(solve_mbp(inst), std::invalid_argument);
  }
  SUBCASE("capacity above one in the unit solver") {
    inst.cap = {2, 1};
    CHECK_THROWS_AS(solve_mbp(inst), std::invalid_argument);
    CHECK_NOTHROW(solve_bbf(inst));
  }
  SUBCASE("zero capacity") {
    inst.cap = {0, 1};
    CHECK_THROWS_AS(solve_bbf(inst), std::invalid_argument);
  }
}

TEST_CASE("a single regular route becomes a one-pair instance") {
  // s -> v, v -> w', w' -> s' with mates; the zero-crossing arc pair is
  // subdivided into the only source pair
  SkewSymmetricNetwork net;
  net.node_count = 6;
  net.add_arc_pair(0, 2, 1);
  net.add_arc_pair(2, 5, 1);
  net.add_arc_pair(5, 1, 1);
  auto red = to_mbp_instance(net);
  CHECK(red.inst.node_count == 5);
  CHECK(red.inst.arc_count() == 4);
  REQUIRE(red.inst.source_pairs.size() == 1);
  auto set = solve_mbp(red.inst);
  CHECK(set.pairs.size() == 1);

  ISFlow f = totally_blocking_isflow(net);
  CHECK(verify_isflow(net, f).empty());
  CHECK(f.value == 2);
  for (Cap v : f.on_arc) CHECK(v == 1);  // the route saturates everything
}

TEST_CASE("a network without regular routes blocks vacuously") {
  // the only plain route 0 -> 2 -> 3 -> 1 uses a mate pair at its ends
  SkewSymmetricNetwork net;
  net.node_count = 4;
  net.add_arc_pair(0, 2, 1);
  net.add_arc_pair(2, 3, 1);
  ISFlow f = totally_blocking_isflow(net);
  CHECK(verify_isflow(net, f).empty());
  CHECK(f.value == 0);
  auto rp = find_regular_path(net);
  CHECK(rp.barrier.has_value());
}

TEST_CASE("cyclic networks are rejected") {
  SkewSymmetricNetwork net;
  net.node_count = 6;
  net.add_arc_pair(0, 2, 1);
  net.add_arc_pair(2, 4, 1);
  net.add_arc_pair(4, 2, 1);  // cycle 2 -> 4 -> 2 on a route to the sink
  net.add_arc_pair(4, 1, 1);
  net.add_arc_pair(2, 1, 1);
  CHECK_THROWS_AS(totally_blocking_isflow(net), std::invalid_argument);
}

TEST_CASE("unit capacities give the same result through either solver") {
  Rng rng(77001);
  for (int t = 0; t < 100; ++t) {
    auto net = gen_random_acyclic_ssf(1 + static_cast<int>(rng() % 5),
                                      1 + static_cast<int>(rng() % 10), 1, rng);
    auto red = to_mbp_instance(net);
    if (red.inst.node_count == 0) continue;
    auto a = solve_mbp(red.inst);
    auto b = solve_bbf(red.inst);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (size_t i = 0; i < a.pairs.size(); ++i) {
      CHECK(a.pairs[i].z == b.pairs[i].z);
      CHECK(a.pairs[i].path_z == b.pairs[i].path_z);
      CHECK(a.pairs[i].path_zm == b.pairs[i].path_zm);
      CHECK(b.pairs[i].alpha == 1);
    }
  }
}

TEST_CASE("random instances: maximal path sets and blocked residuals") {
  Rng rng(424242);
  int nonempty_sets = 0, shrunk_like = 0;
  for (int t = 0; t < 400; ++t) {
    int pairs = 1 + static_cast<int>(rng() % 5);
    int arc_pairs = 1 + static_cast<int>(rng() % 10);
    Cap max_cap = 1 + static_cast<Cap>(rng() % 3);
    auto net = gen_random_acyclic_ssf(pairs, arc_pairs, max_cap, rng);
    auto red = to_mbp_instance(net);
    ISFlow f = totally_blocking_isflow(net);
    CHECK(verify_isflow(net, f).empty());
    CHECK(f.value % 2 == 0);

    if (red.inst.node_count > 0) {
      bool all_unit = true;
      for (Cap u : red.inst.cap) all_unit &= (u == 1);
      auto set = all_unit ? solve_mbp(red.inst) : solve_bbf(red.inst);
      auto gf = checked_flow(red.inst, set);
      CHECK(!oracle_mbp_good_pair(red.inst, remaining_caps(red.inst, gf)));
      if (!set.pairs.empty()) ++nonempty_sets;
      for (const GoodPair& gp : set.pairs)
        if (gp.path_z.size() > 2 || gp.path_zm.size() > 2) ++shrunk_like;
    }

    // nothing regular is left once the flow is subtracted
    SkewSymmetricNetwork rem = net;
    for (int a = 0; a < net.arc_count(); ++a) rem.arcs[a].cap -= f.on_arc[a];
    auto rp = find_regular_path(rem);
    CHECK(rp.barrier.has_value());
    CHECK(!rp.path.has_value());
  }
  CHECK(nonempty_sets > 60);  // the corpus exercises real work
  CHECK(shrunk_like > 20);
}

TEST_CASE("a medium instance blocks and stays consistent") {
  Rng rng(5150);
  auto net = gen_random_acyclic_ssf(200, 1500, 4, rng);
  ISFlow f = totally_blocking_isflow(net);
  CHECK(verify_isflow(net, f).empty());
  CHECK(f.value > 0);
  SkewSymmetricNetwork rem = net;
  for (int a = 0; a < net.arc_count(); ++a) rem.arcs[a].cap -= f.on_arc[a];
  auto rp = find_regular_path(rem);
  CHECK(rp.barrier.has_value());
}
