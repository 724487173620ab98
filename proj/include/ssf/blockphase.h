// Totally blocking symmetric flows in acyclic networks.
//
// The acyclic network is cut along an antisymmetric node potential into a
// one-sided instance: an acyclic digraph with a sink and paired sources,
// where arc-disjoint path pairs from mate sources correspond to regular
// source-to-sink paths of the original.  A transit depth-first search
// builds a maximal set of such pairs (unit capacities in linear time,
// general capacities via a split graph).
#pragma once

#include <utility>
#include <vector>

#include "ssf/core.h"

namespace ssf {

// One-sided instance: acyclic digraph, sink t, and a set of sources
// partitioned into pairs.  Sources must have indegree zero and every node
// must lie on a source-to-sink path.  Empty cap means all-unit.
struct MBPInstance {
  int node_count = 0;
  std::vector<int> tail, head;
  std::vector<Cap> cap;
  int sink = 0;
  std::vector<std::pair<int, int>> source_pairs;

  int arc_count() const { return static_cast<int>(tail.size()); }
};

// Two arc-disjoint paths to the sink from a pair of mate sources, carrying
// alpha units each.
struct GoodPair {
  int z = -1, zm = -1;
  std::vector<int> path_z, path_zm;  // instance arc ids
  Cap alpha = 1;
};

struct BalancedPathSet {
  std::vector<GoodPair> pairs;
};

// Instance produced from an acyclic network, with the arc correspondence
// needed to map path pairs back to a symmetric flow.
struct MBPReduction {
  MBPInstance inst;
  std::vector<int> net_arc;  // instance arc id -> network arc id
};

// Cuts the positive-capacity part of an acyclic network along a potential;
// nodes not on any source-to-sink path are dropped first.  Rejects cyclic
// inputs.
MBPReduction to_mbp_instance(const SkewSymmetricNetwork& net);

// Maximal balanced path-set on a unit-capacity instance; near-linear time.
BalancedPathSet solve_mbp(const MBPInstance& inst);

// Balanced blocking flow on a capacitated instance, as weighted good
// pairs; paths of one pair may share an instance arc (via its two split
// copies) but carry at most its capacity in total.
BalancedPathSet solve_bbf(const MBPInstance& inst);

// Flow vector over instance arcs summed from a path set.
std::vector<Cap> path_set_flow(const MBPInstance& inst,
                               const BalancedPathSet& set);

// Flow such that the remaining capacities admit no regular source-to-sink
// path.  Rejects cyclic inputs (over positive-capacity arcs).
ISFlow totally_blocking_isflow(const SkewSymmetricNetwork& net);

// Exhaustive reference check: does any good pair fit in the remaining
// capacities?  Intended for tests on small instances only.
bool oracle_mbp_good_pair(const MBPInstance& inst,
                          const std::vector<Cap>& remaining);

}  // namespace ssf
