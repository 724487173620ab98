// Reductions between matching-type problems and symmetric flows, plus
// elimination of lower capacity bounds by arc subdivision.
#pragma once

#include <utility>
#include <vector>

#include "ssf/core.h"

namespace ssf {

// Undirected multigraph with per-edge and per-node double-sided bounds:
// a feasible selection h picks h(e) in [u0(e), u(e)] copies of each edge
// subject to b0(v) <= sum of h over edges at v <= b(v).
struct MatchingInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Cap> u0, u;  // per edge; u may be the instance's infinity
  std::vector<Cap> b0, b;  // per node
  Cap infinite = -1;       // sentinel value used in u, or -1 when unused

  // all-unit cardinality matching instance
  static MatchingInstance cardinality(int n,
                                      std::vector<std::pair<int, int>> edges);
};

// Network with double-sided arc capacities lower <= cap (both symmetric).
struct BoundedNetwork {
  SkewSymmetricNetwork net;
  std::vector<Cap> lower;
};

// Inversion data for the matching reduction: which arc pair carries which
// original edge or node.
struct BackMap {
  enum class Kind : char { edge, node };
  std::vector<Kind> kind;       // per arc
  std::vector<int> orig;        // per arc: edge index or node index
  std::vector<int> edge_first;  // edge index -> its (v1, w2) arc id
};

// Nodes v map to the symmetric pair (v1, v2); each edge {v, w} becomes the
// symmetric arcs (v1, w2) and (w1, v2) with the edge bounds, each node gets
// (s, v1) and (v2, s') with the node bounds.  Flow value is twice the
// selection value.  Node upper bounds are clamped to the total capacity of
// incident edges (never below the node lower bound).
std::pair<BoundedNetwork, BackMap> matching_to_network(
    const MatchingInstance& inst);

// Result of rewriting lower bounds away: each bounded arc pair is
// subdivided into three pieces with two extra forced arcs whose saturation
// by a maximum flow decides feasibility.
struct LowerBoundElimination {
  SkewSymmetricNetwork net;
  std::vector<int> extra_arcs;  // arcs that must be saturated
  std::vector<int> carrier;     // original arc id -> new arc with f(a) - l(a)
  std::vector<Cap> lower;       // copy of the original lower bounds

  bool feasible(const ISFlow& f) const;
  // Flow on the original network induced by a feasible maximum flow of the
  // rewritten one; only valid when feasible(f).
  ISFlow induce(const SkewSymmetricNetwork& orig, const ISFlow& f) const;
};

LowerBoundElimination eliminate_lower_bounds(const BoundedNetwork& bn);

// Per-edge selection recovered from a flow on the reduced network; the
// selection value is half the flow value.
std::vector<Cap> flow_to_matching(const BoundedNetwork& bn, const ISFlow& f,
                                  const BackMap& bm);

// Every arc of positive capacity q becomes q parallel unit arcs with mate
// pairing preserved; orig maps copies back.
struct UnitSplit {
  SkewSymmetricNetwork net;
  std::vector<int> orig;  // unit arc id -> original arc id
};

// `infinite` is the caller's declared sentinel; arcs at or above it are
// rejected (pass -1 when no sentinel is in use).
UnitSplit unit_split(const SkewSymmetricNetwork& net, Cap infinite = -1);

}  // namespace ssf
