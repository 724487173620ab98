#include "ssf/compress.h"

#include "doctest.h"

#include <algorithm>
#include <set>

#include "ssf/certify.h"
#include "ssf/gen.h"
#include "ssf/reductions.h"
#include "ssf/solvers.h"

using namespace ssf;

namespace {

SkewSymmetricNetwork matching_network(
    int n, const std::vector<std::pair<int, int>>& edges) {
  auto inst = MatchingInstance::cardinality(n, edges);
  return matching_to_network(inst).first.net;
}

// Structural validity: every middle-layer arc covered exactly once, each
// clique complete, mirror cliques element-wise mates of each other.
void check_partition(const SkewSymmetricNetwork& net,
                     const CliquePartition& part) {
  REQUIRE(part.cliques.size() % 2 == 0);
  std::set<std::pair<int, int>> middle, covered;
  for (const Arc& a : net.arcs)
    if (a.tail >= 2 && a.head >= 2) middle.insert({a.tail, a.head});
  for (size_t j = 0; j < part.cliques.size(); ++j) {
    const BipClique& c = part.cliques[j];
    REQUIRE(!c.a_nodes.empty());
    REQUIRE(!c.b_nodes.empty());
    for (int x : c.a_nodes)
      for (int y : c.b_nodes) {
        REQUIRE(middle.count({x, y}));
        REQUIRE(!covered.count({x, y}));
        covered.insert({x, y});
      }
    if (j % 2) {
      const BipClique& p = part.cliques[j - 1];
      REQUIRE(c.a_nodes.size() == p.b_nodes.size());
      for (size_t i = 0; i < c.a_nodes.size(); ++i)
        CHECK(c.a_nodes[i] == SkewSymmetricNetwork::node_mate(p.b_nodes[i]));
      for (size_t i = 0; i < c.b_nodes.size(); ++i)
        CHECK(c.b_nodes[i] == SkewSymmetricNetwork::node_mate(p.a_nodes[i]));
    }
  }
  CHECK(covered == middle);
}

}  // namespace

TEST_CASE("clique dimensions follow the density formulas") {
  auto [a, b] = delta_clique_dims(256, 65536, 0.25);
  CHECK(a == 64);
  CHECK(b == 2);
  auto [a2, b2] = delta_clique_dims(64, 64, 0.25);  // sparse: tiny B side
  CHECK(a2 == 23);
  CHECK(b2 == 0);
}

TEST_CASE("a sparse graph ends up with single-arc cliques only") {
  SkewSymmetricNetwork net =
      matching_network(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto part = symmetric_clique_partition(net, 0.25);
  check_partition(net, part);
  for (const auto& c : part.cliques) {
    CHECK(c.a_nodes.size() == 1);
    CHECK(c.b_nodes.size() == 1);
  }
  auto st = compress_to_stars(net, part);
  // singleton stars are not worth it, so the network is copied as is
  CHECK(st.net.arc_count() == net.arc_count());
  CHECK(st.net.node_count == net.node_count);
  auto rep = max_isflow_sbfm(st.net);
  CHECK(rep.flow.value == 4);
  ISFlow back = decompress_flow(net, st, rep.flow);
  CHECK(back.value == 4);
}

TEST_CASE("partitions that miss or repeat arcs are rejected") {
  SkewSymmetricNetwork net = matching_network(3, {{0, 1}, {1, 2}, {0, 2}});
  auto part = symmetric_clique_partition(net, 0.25);
  check_partition(net, part);
  auto missing = part;
  missing.cliques.resize(missing.cliques.size() - 2);
  CHECK_THROWS_AS(compress_to_stars(net, missing), std::invalid_argument);
  auto doubled = part;
  doubled.cliques.push_back(doubled.cliques[0]);
  doubled.cliques.push_back(doubled.cliques[1]);
  CHECK_THROWS_AS(compress_to_stars(net, doubled), std::invalid_argument);
}

TEST_CASE("a dense graph compresses and keeps its matching value") {
  const int n = 96;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) edges.push_back({v, w});
  SkewSymmetricNetwork net = matching_network(n, edges);
  auto part = symmetric_clique_partition(net, 0.45);
  check_partition(net, part);
  auto st = compress_to_stars(net, part);
  CHECK(st.net.arc_count() < net.arc_count());
  auto rep = max_isflow_sbfm(st.net);
  CHECK(rep.flow.value == n);  // a complete graph matches perfectly
  ISFlow back = decompress_flow(net, st, rep.flow);
  CHECK(back.value == n);
  CHECK(verify_isflow(net, back).empty());
}

TEST_CASE("random dense graphs: value preserved through the round trip") {
  Rng rng(5150);
  for (int trial = 0; trial < 3; ++trial) {
    int n = 40 + 8 * trial;
    auto edges = gen_dense_graph(n, rng);
    SkewSymmetricNetwork net = matching_network(n, edges);
    auto part = symmetric_clique_partition(net, 0.45);
    check_partition(net, part);
    auto st = compress_to_stars(net, part);
    auto direct = max_isflow_sbfm(net);
    auto compressed = max_isflow_sbfm(st.net);
    CHECK(compressed.flow.value == direct.flow.value);
    ISFlow back = decompress_flow(net, st, compressed.flow);
    CHECK(back.value == direct.flow.value);
    CHECK(verify_isflow(net, back).empty());
  }
}

TEST_CASE("one unit through a star lands on a concrete clique arc") {
  // two triangles sharing no vertex force at least one starred clique on
  // dense inputs is hard to pin; use the complete graph on 8 nodes with a
  // partition built by hand degenerately via the algorithm at high delta
  const int n = 8;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) edges.push_back({v, w});
  SkewSymmetricNetwork net = matching_network(n, edges);
  auto part = symmetric_clique_partition(net, 0.45);
  check_partition(net, part);
  auto st = compress_to_stars(net, part);
  auto rep = max_isflow_augmenting(st.net);
  CHECK(rep.flow.value == n);
  ISFlow back = decompress_flow(net, st, rep.flow);
  CHECK(back.value == n);
}
