#include "doctest.h"
#include "ssf/certify.h"
#include "ssf/gen.h"

using namespace ssf;

namespace {

SkewSymmetricNetwork barrier_net() {
  // s->v, v->v' twice (mates), v'->s': every s->s' route needs both members
  // of a mate pair, so no regular path exists.
  SkewSymmetricNetwork net;
  net.node_count = 4;
  net.add_arc_pair(0, 2, 1);  // 0: s->v, 1: v'->s'
  net.add_arc_pair(2, 3, 1);  // 2,3: v->v' parallel mates
  return net;
}

SkewSymmetricNetwork route3_net() {
  SkewSymmetricNetwork net;
  net.node_count = 6;
  net.add_arc_pair(0, 2, 1);
  net.add_arc_pair(2, 4, 1);
  net.add_arc_pair(4, 1, 1);
  return net;
}

}  // namespace

TEST_CASE("verify_isflow flags the standard violations") {
  auto net = route3_net();
  ISFlow f = zero_flow(net);
  CHECK(verify_isflow(net, f).empty());

  SUBCASE("asymmetric") {
    f.on_arc[0] = 1;
    auto bad = verify_isflow(net, f);
    bool found = false;
    for (auto& s : bad) found |= s.find("asymmetric") != std::string::npos;
    CHECK(found);
  }
  SUBCASE("capacity") {
    f.on_arc = {2, 2, 2, 2, 2, 2};
    f.value = 4;
    auto bad = verify_isflow(net, f);
    bool found = false;
    for (auto& s : bad) found |= s.find("exceeds") != std::string::npos;
    CHECK(found);
  }
  SUBCASE("good unit route flow") {
    f.on_arc = {1, 1, 1, 1, 1, 1};
    f.value = 2;
    CHECK(verify_isflow(net, f).empty());
  }
}

TEST_CASE("regular path oracle") {
  SUBCASE("clean route exists with its length") {
    auto net = route3_net();
    CHECK(oracle_rpath(net));
    CHECK(oracle_rdist(net) == 3);
  }
  SUBCASE("mate-pair bottleneck has no regular path") {
    CHECK(!oracle_rpath(barrier_net()));
    CHECK(!oracle_rdist(barrier_net()).has_value());
  }
  SUBCASE("split of capacity 2 restores reachability") {
    auto net = barrier_net();
    std::vector<Cap> h = {2, 2, 2, 2};
    auto split = build_split_graph(net, h);
    CHECK(oracle_rpath(split.g));
    CHECK(oracle_rdist(split.g) == 3);
  }
  SUBCASE("budget enforced") {
    Rng rng(1);
    auto net = gen_random_ssf(30, 12, 1, rng);
    CHECK_THROWS(oracle_rpath(net));
  }
}

TEST_CASE("odd barrier verification") {
  SUBCASE("trivial barrier on an arcless net") {
    SkewSymmetricNetwork net;
    net.node_count = 2;
    OddBarrier b;
    b.A = {0};
    b.capacity = 0;
    CHECK(!verify_odd_barrier(net, b).has_value());
  }
  SUBCASE("blossom-style barrier") {
    auto net = barrier_net();
    OddBarrier b;
    b.A = {0};
    b.X = {{2, 3}};
    b.capacity = 0;  // u(A, V-A) = 1, k = 1
    CHECK(odd_barrier_capacity(net, b) == 0);
    CHECK(!verify_odd_barrier(net, b).has_value());
  }
  SUBCASE("even entry capacity violates O4") {
    auto net = barrier_net();
    net.arcs[0].cap = 2;
    net.arcs[1].cap = 2;
    OddBarrier b;
    b.A = {0};
    b.X = {{2, 3}};
    b.capacity = 1;
    auto err = verify_odd_barrier(net, b);
    REQUIRE(err.has_value());
    CHECK(err->find("O4") != std::string::npos);
  }
  SUBCASE("arc from A to A-prime violates nothing structural but counts") {
    // adding an s->s' arc keeps the barrier valid, only capacity grows
    auto net = barrier_net();
    net.add_arc_pair(0, 1, 1);
    OddBarrier b;
    b.A = {0};
    b.X = {{2, 3}};
    b.capacity = 2;
    CHECK(!verify_odd_barrier(net, b).has_value());
  }
  SUBCASE("X set touching M violates O6") {
    SkewSymmetricNetwork net;
    net.node_count = 6;
    net.add_arc_pair(0, 2, 1);
    net.add_arc_pair(2, 3, 1);
    net.add_arc_pair(2, 4, 1);  // X touches the 4/5 pair
    OddBarrier b;
    b.A = {0};
    b.X = {{2, 3}};
    b.capacity = 0;
    auto err = verify_odd_barrier(net, b);
    REQUIRE(err.has_value());
    CHECK(err->find("O6") != std::string::npos);
  }
}

TEST_CASE("matching oracle basics") {
  CHECK(oracle_max_matching(3, {{0, 1}, {1, 2}, {0, 2}}) == 1);
  CHECK(oracle_max_matching(2, {{0, 1}}) == 1);
  CHECK(oracle_max_matching(4, {}) == 0);
  // the 5-node example graph: a-b, b-c, b-d, c-d, d-e
  CHECK(oracle_max_matching(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}) == 2);
}

TEST_CASE("flow oracle on hand instances") {
  SUBCASE("unit route") {
    SkewSymmetricNetwork net;
    net.node_count = 6;
    net.add_arc_pair(0, 2, 1);
    net.add_arc_pair(2, 4, 1);
    net.add_arc_pair(4, 1, 1);
    CHECK(oracle_max_isflow(net) == 2);
  }
  SUBCASE("mate bottleneck of capacity 1 blocks everything") {
    CHECK(oracle_max_isflow(barrier_net()) == 0);
  }
  SUBCASE("mate bottleneck of capacity 2 passes two units") {
    auto net = barrier_net();
    net.arcs[0].cap = net.arcs[1].cap = 2;
    net.arcs[2].cap = net.arcs[3].cap = 2;
    // f = 2 on s->v, 1 on each parallel v->v' arc, symmetric
    CHECK(oracle_max_isflow(net) == 2);
  }
  SUBCASE("weak duality against the blossom barrier") {
    auto net = barrier_net();
    OddBarrier b;
    b.A = {0};
    b.X = {{2, 3}};
    b.capacity = 0;
    REQUIRE(!verify_odd_barrier(net, b).has_value());
    CHECK(oracle_max_isflow(net) <= b.capacity);
  }
}
