#include "ssf/solvers.h"

#include "doctest.h"

#include <vector>

#include "ssf/certify.h"
#include "ssf/gen.h"
#include "ssf/reductions.h"

using namespace ssf;

namespace {

void check_report(const SkewSymmetricNetwork& net, const SolveReport& rep) {
  CHECK(verify_isflow(net, rep.flow).empty());
  auto bad = verify_odd_barrier(net, rep.certificate);
  CAPTURE(bad.value_or(""));
  CHECK(!bad);
  CHECK(rep.certificate.capacity == rep.flow.value);
}

std::vector<SolveReport> solve_all(const SkewSymmetricNetwork& net) {
  std::vector<SolveReport> out;
  out.push_back(max_isflow_augmenting(net));
  out.push_back(max_isflow_sapm(net));
  out.push_back(max_isflow_anstee(net));
  out.push_back(max_isflow_sbfm(net));
  for (const auto& r : out) check_report(net, r);
  for (const auto& r : out) CHECK(r.flow.value == out[0].flow.value);
  return out;
}

SkewSymmetricNetwork matching_network(
    int n, const std::vector<std::pair<int, int>>& edges) {
  auto inst = MatchingInstance::cardinality(n, edges);
  return matching_to_network(inst).first.net;
}

}  // namespace

TEST_CASE("an arcless network yields a zero flow and a zero certificate") {
  SkewSymmetricNetwork net;
  net.node_count = 4;
  auto reps = solve_all(net);
  for (const auto& r : reps) {
    CHECK(r.flow.value == 0);
    CHECK(r.certificate.capacity == 0);
    CHECK(r.phase_or_iteration_count == 0);
  }
}

TEST_CASE("a single route saturates in one step") {
  SkewSymmetricNetwork net;
  net.node_count = 6;
  net.add_arc_pair(0, 2, 3);
  net.add_arc_pair(2, 5, 3);
  net.add_arc_pair(5, 1, 3);
  auto reps = solve_all(net);
  for (const auto& r : reps) CHECK(r.flow.value == 6);
  CHECK(reps[0].phase_or_iteration_count == 1);
  CHECK(reps[1].phase_or_iteration_count == 1);
  CHECK(reps[2].phase_or_iteration_count == 0);  // pre-solution is optimal
  CHECK(reps[3].phase_or_iteration_count == 1);
}

TEST_CASE("the triangle matching network maxes out at one matched edge") {
  SkewSymmetricNetwork net = matching_network(3, {{0, 1}, {1, 2}, {0, 2}});
  auto reps = solve_all(net);
  for (const auto& r : reps) {
    CHECK(r.flow.value == 2);
    CHECK(r.certificate.capacity == 2);
    // one odd component is what caps the value below the cut capacity
    CHECK(r.certificate.X.size() == 1);
  }
}

TEST_CASE("the five-node graph matches through the flow reduction") {
  auto inst = MatchingInstance::cardinality(
      5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  auto [bn, bm] = matching_to_network(inst);
  auto reps = solve_all(bn.net);
  for (const auto& r : reps) CHECK(r.flow.value == 4);
  auto picked = flow_to_matching(bn, reps[1].flow, bm);
  Cap total = 0;
  for (Cap x : picked) total += x;
  CHECK(total == 2);
}

TEST_CASE("transit capacity sums the throughput of inner nodes") {
  SkewSymmetricNetwork net;
  net.node_count = 6;
  net.add_arc_pair(0, 2, 5);
  net.add_arc_pair(2, 5, 2);
  net.add_arc_pair(5, 1, 5);
  // node 2: in 5, out 2 -> 2; node 5: in 2, out 5 -> 2; mates 3, 4 mirror
  CHECK(transit_capacity_sum(net) == 8);
}

TEST_CASE("all four solvers agree with the exhaustive search") {
  Rng rng(20260826);
  int nonzero = 0;
  for (int trial = 0; trial < 140; ++trial) {
    int pairs = 2 + static_cast<int>(rng() % 3);
    int arc_pairs = 2 + static_cast<int>(rng() % 7);
    SkewSymmetricNetwork net = gen_random_ssf(pairs, arc_pairs, 3, rng);
    Cap best = oracle_max_isflow(net);
    CAPTURE(trial);
    auto reps = solve_all(net);
    for (const auto& r : reps) CHECK(r.flow.value == best);
    if (best > 0) ++nonzero;
  }
  CHECK(nonzero > 35);
}

TEST_CASE("shortest-path style solvers report ordered lengths") {
  Rng rng(7);
  int multi_phase = 0;
  for (int trial = 0; trial < 60; ++trial) {
    SkewSymmetricNetwork net =
        gen_random_ssf(4 + static_cast<int>(rng() % 4),
                       10 + static_cast<int>(rng() % 15), 4, rng);
    auto sapm = max_isflow_sapm(net);
    for (size_t i = 1; i < sapm.rdists.size(); ++i)
      CHECK(sapm.rdists[i] >= sapm.rdists[i - 1]);
    auto sbfm = max_isflow_sbfm(net);
    CHECK(sbfm.flow.value == sapm.flow.value);
    for (size_t i = 1; i < sbfm.rdists.size(); ++i)
      CHECK(sbfm.rdists[i] > sbfm.rdists[i - 1]);
    CHECK(sbfm.phase_or_iteration_count <= sapm.phase_or_iteration_count);
    if (sbfm.phase_or_iteration_count > 1) ++multi_phase;
  }
  CHECK(multi_phase > 5);
}

TEST_CASE("a medium network solves the same way by every method") {
  Rng rng(99);
  SkewSymmetricNetwork net = gen_random_ssf(40, 160, 6, rng);
  auto reps = solve_all(net);
  CHECK(reps[0].flow.value > 0);
}

TEST_CASE("matching networks from random graphs agree with brute force") {
  Rng rng(424242);
  int matched = 0;
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto edges = gen_random_graph(n, 2 + static_cast<int>(rng() % 6), rng);
    if (edges.empty()) continue;
    int best = oracle_max_matching(n, edges);
    SkewSymmetricNetwork net = matching_network(n, edges);
    auto reps = solve_all(net);
    for (const auto& r : reps) CHECK(r.flow.value == 2 * best);
    matched += best;
  }
  CHECK(matched > 20);
}
