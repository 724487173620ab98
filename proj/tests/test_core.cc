#include "doctest.h"
#include "ssf/certify.h"
#include "ssf/core.h"
#include "ssf/gen.h"

using namespace ssf;

namespace {

// s -> 2 -> 3 -> s' route with mates; caps as given.
SkewSymmetricNetwork route_net(Cap cap) {
  SkewSymmetricNetwork net;
  net.node_count = 4;
  net.add_arc_pair(0, 2, cap);  // s->v, mate v'->s'
  return net;
}

}  // namespace

TEST_CASE("validate_network accepts a mate pair and rejects broken ones") {
  SkewSymmetricNetwork net;
  net.node_count = 4;
  net.add_arc_pair(0, 2, 1);  // (0->2) and (3->1)
  CHECK(net.arcs[0].tail == 0);
  CHECK(net.arcs[0].head == 2);
  CHECK(net.arcs[1].tail == 3);
  CHECK(net.arcs[1].head == 1);
  CHECK(validate_network(net).empty());

  SUBCASE("asymmetric capacity") {
    net.arcs[1].cap = 2;
    auto bad = validate_network(net);
    REQUIRE(!bad.empty());
    CHECK(bad[0].find("asymmetric capacity") != std::string::npos);
  }
  SUBCASE("fixed point in involution") {
    net.arcs[0].mate = 0;
    auto bad = validate_network(net);
    REQUIRE(!bad.empty());
    bool found = false;
    for (auto& s : bad) found |= s.find("fixed point") != std::string::npos;
    CHECK(found);
  }
  SUBCASE("wrong mate endpoints") {
    net.add_arc_pair(2, 3, 1);
    net.arcs[2].head = 2;  // now a loop; mate endpoints no longer match
    CHECK(!validate_network(net).empty());
  }
}

TEST_CASE("split graph capacities and deletions") {
  SkewSymmetricNetwork g;
  g.node_count = 4;
  g.add_arc_pair(0, 2, 0);
  g.add_arc_pair(2, 3, 0);
  SUBCASE("cap 5 gives 3 and 2") {
    auto split = build_split_graph(g, {5, 5, 5, 5});
    REQUIRE(split.g.arc_count() == 8);
    CHECK(split.g.arcs[0].cap == 3);
    CHECK(split.g.arcs[1].cap == 2);
    CHECK(split.omega[0] == 0);
    CHECK(split.omega[1] == 0);
    CHECK(validate_network(split.g).empty());
    // mates of split arcs are the same-index copies of the mate arc
    CHECK(split.omega[split.g.arcs[0].mate] == 1);
    CHECK(split.is_second[split.g.arcs[0].mate] == 0);
  }
  SUBCASE("cap 1 keeps only the first copy") {
    auto split = build_split_graph(g, {1, 1, 0, 0});
    REQUIRE(split.g.arc_count() == 2);
    CHECK(split.g.arcs[0].cap == 1);
    CHECK(validate_network(split.g).empty());
  }
  SUBCASE("cap 0 drops the arc") {
    auto split = build_split_graph(g, {0, 0, 0, 0});
    CHECK(split.g.arc_count() == 0);
  }
  SUBCASE("asymmetric capacities rejected") {
    CHECK_THROWS(build_split_graph(g, {1, 2, 0, 0}));
  }
}

TEST_CASE("lift_regular_path") {
  // s->v (pair with v'->s'), and v->v' twice so a path can use a mate pair
  SkewSymmetricNetwork g;
  g.node_count = 4;
  g.add_arc_pair(0, 2, 2);   // 0: s->v, 1: v'->s'
  g.add_arc_pair(2, 3, 2);   // 2: v->v', 3: v->v' (mates, parallel)
  g.add_arc_pair(2, 1, 2);   // 4: v->s', 5: s->v'
  std::vector<Cap> h = {2, 2, 2, 2, 2, 2};
  auto split = build_split_graph(g, h);

  SUBCASE("all-ordinary path maps to first copies") {
    std::vector<int> q = {0, 4};  // s->v->s', no mates shared
    auto p = lift_regular_path(split, g, h, q);
    REQUIRE(p.size() == 2);
    for (size_t i = 0; i < q.size(); ++i) {
      CHECK(split.omega[p[i]] == q[i]);
      CHECK(split.is_second[p[i]] == 0);
    }
    CHECK(is_regular_path(split.g, p, 0, 1));
  }
  SUBCASE("h=1 with both mates is rejected") {
    std::vector<Cap> h1 = {1, 1, 1, 1, 1, 1};
    auto split1 = build_split_graph(g, h1);
    std::vector<int> q = {0, 2, 1};  // uses arc 0 and its mate 1
    CHECK_THROWS(lift_regular_path(split1, g, h1, q));
  }
  SUBCASE("mate pair at h=2 uses first then second copy") {
    std::vector<int> q = {0, 2, 1};  // s->v->v'->s' with mates 0 and 1
    auto p = lift_regular_path(split, g, h, q);
    CHECK(split.is_second[p[0]] == 0);
    CHECK(split.is_second[p[2]] == 1);
    CHECK(is_regular_path(split.g, p, 0, 1));
  }
}

TEST_CASE("residual and superpose") {
  auto net = route_net(3);
  ISFlow f = zero_flow(net);
  f.on_arc = {1, 1};
  f.value = 0;  // value only meaningful for s->s' flows; this net has no route
  auto res = residual(net, f);
  CHECK(res.g.arcs[0].cap == 2);
  CHECK(res.g.arcs[2].cap == 1);
  CHECK(res.g.arcs[2].tail == 2);
  CHECK(res.g.arcs[2].head == 0);
  CHECK(res.g.arcs[res.g.arcs[2].mate].cap == 1);
  CHECK(validate_network(res.g).empty());

  SUBCASE("zero residual flow is the identity") {
    auto f2 = superpose(net, f, std::vector<Cap>(4, 0));
    CHECK(f2.on_arc == f.on_arc);
  }
  SUBCASE("reverse flow cancels") {
    std::vector<Cap> g = {0, 0, 1, 1};
    auto f2 = superpose(net, f, g);
    CHECK(f2.on_arc[0] == 0);
    CHECK(f2.on_arc[1] == 0);
  }
  SUBCASE("overflow rejected") {
    std::vector<Cap> g = {3, 3, 0, 0};
    CHECK_THROWS(superpose(net, f, g));
  }
}

TEST_CASE("full superposition on a complete route") {
  SkewSymmetricNetwork net;
  net.node_count = 6;
  net.add_arc_pair(0, 2, 3);  // s->v / v'->s'
  net.add_arc_pair(2, 4, 3);  // v->w / w'->v'  (w' = 5? no: mate(4)=5)
  net.add_arc_pair(4, 1, 3);  // w->s' / s->w'
  ISFlow f = zero_flow(net);
  std::vector<Cap> g(12, 0);
  g[0] = g[1] = g[2] = g[3] = g[4] = g[5] = 2;  // 2 units on route + mate
  auto f2 = superpose(net, f, g);
  CHECK(f2.value == 4);
  CHECK(verify_isflow(net, f2).empty());
}

TEST_CASE("path capacity over ordinary and mate arcs") {
  SkewSymmetricNetwork g;
  g.node_count = 4;
  g.add_arc_pair(0, 2, 5);
  g.add_arc_pair(2, 3, 5);
  std::vector<Cap> h = {7, 7, 5, 5};
  CHECK(path_capacity(g, h, {0, 2}) == 5);       // all ordinary
  CHECK(path_capacity(g, h, {0, 2, 3}) == 2);    // mate pair floors to 5/2
}

TEST_CASE("random networks validate and split-lift roundtrip holds") {
  Rng rng(12345);
  for (int t = 0; t < 200; ++t) {
    auto net = gen_random_ssf(5, 8, 3, rng);
    CHECK(validate_network(net).empty());
    std::vector<Cap> h;
    for (auto& a : net.arcs) h.push_back(a.cap);
    auto split = build_split_graph(net, h);
    CHECK(validate_network(split.g).empty());
  }
}
