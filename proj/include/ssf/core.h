// Core data model: skew-symmetric networks, flows, residual and split graphs.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ssf {

using Cap = long long;

struct Arc {
  int tail = 0;
  int head = 0;
  Cap cap = 0;
  int mate = -1;  // arc id of the involution partner
};

// Directed graph with a fixed-point-free involution on nodes and arcs.
// Node mates are positional: 2k <-> 2k+1.  Node 0 is the source, node 1
// (its mate) is the sink.  Arc mates are explicit ids because parallel
// arcs make endpoint-based inference ambiguous.
struct SkewSymmetricNetwork {
  int node_count = 0;
  std::vector<Arc> arcs;

  static int node_mate(int v) { return v ^ 1; }
  int source() const { return 0; }
  int sink() const { return 1; }
  int arc_count() const { return static_cast<int>(arcs.size()); }

  // Adds arc (tail,head) and its mate (head^1, tail^1); returns the id of
  // the first.  The two get mutually linked mate ids.
  int add_arc_pair(int tail, int head, Cap cap);

  // Sentinel for "unbounded" capacity: sum of finite caps + 1, computed
  // once all finite arcs are present.  Kept explicit so arithmetic stays
  // exact 64-bit.
  Cap infinite_cap() const;
};

// Symmetric integer flow; on_arc is indexed by arc id.
struct ISFlow {
  std::vector<Cap> on_arc;
  Cap value = 0;
};

// G plus a reverse arc per original arc.  Arc ids 0..m-1 are the original
// arcs (residual capacity u - f), ids m..2m-1 the reverses (capacity f);
// reverse of arc a is a + m, and mates extend as mate(a + m) = mate(a) + m.
struct ResidualNetwork {
  SkewSymmetricNetwork g;
  int orig_arc_count = 0;

  bool is_reverse(int a) const { return a >= orig_arc_count; }
  int reverse(int a) const {
    return a >= orig_arc_count ? a - orig_arc_count : a + orig_arc_count;
  }
};

// Each arc a of capacity h(a) becomes up to two parallel arcs with
// capacities ceil(h/2) and floor(h/2); zero-capacity arcs are dropped.
// omega maps split-arc ids back to originals.
struct SplitGraph {
  SkewSymmetricNetwork g;
  std::vector<int> omega;       // split arc id -> original arc id
  std::vector<char> is_second;  // 1 if the floor-half copy
};

// delta units along a simple path or cycle P and its mate.
struct ElementaryFlow {
  std::vector<int> path;  // arc ids of P
  std::vector<int> mate_path;
  Cap delta = 0;
  bool is_cycle = false;
};

// (A; X_1..X_k): certifies that no regular path from s to s' exists.
struct SBarrier {
  std::vector<int> A;
  std::vector<std::vector<int>> X;
  std::vector<int> entry_arcs;  // the unique arc from A into each X_i
};

// Capacitated counterpart; capacity u(A, V-A) - k bounds the flow value.
struct OddBarrier {
  std::vector<int> A;
  std::vector<std::vector<int>> X;
  Cap capacity = 0;
};

// validate_network: empty result means the network is well-formed;
// otherwise each string describes one violated invariant.
std::vector<std::string> validate_network(const SkewSymmetricNetwork& net);

SplitGraph build_split_graph(const SkewSymmetricNetwork& g,
                             const std::vector<Cap>& h);

// Maps an h-regular path in the original graph to a regular path in the
// split graph (arc-mate pairs go to the two distinct copies).
std::vector<int> lift_regular_path(const SplitGraph& split,
                                   const SkewSymmetricNetwork& g,
                                   const std::vector<Cap>& h,
                                   const std::vector<int>& path);

ResidualNetwork residual(const SkewSymmetricNetwork& net, const ISFlow& f);

// f plus a flow g on the residual arcs: result(a) = f(a) + g(a) - g(a^R).
ISFlow superpose(const SkewSymmetricNetwork& net, const ISFlow& f,
                 const std::vector<Cap>& g);

ISFlow zero_flow(const SkewSymmetricNetwork& net);

// Minimum of cap over ordinary arcs and floor(cap/2) over arcs whose mate
// is also on the path.
Cap path_capacity(const SkewSymmetricNetwork& g, const std::vector<Cap>& h,
                  const std::vector<int>& path);

// True if the arc sequence forms a directed path and no arc appears
// together with its mate.
bool is_regular_path(const SkewSymmetricNetwork& g, const std::vector<int>& path,
                     int from, int to);

}  // namespace ssf
