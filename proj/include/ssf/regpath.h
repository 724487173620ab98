// Regular reachability and unit-length shortest regular paths.
//
// find_regular_path: either a regular s->s' path or a verified barrier.
// shortest_unit_sra: r-distance under unit arc lengths plus the trimmed
// zero-reduced-length graph and the tables needed to expand its paths
// back into shortest regular paths of the input graph.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ssf/core.h"

namespace ssf {

// A self-symmetric node set not containing s, entered by a base arc.
struct Fragment {
  std::vector<int> nodes;
  int base_arc = -1;
};

struct RegPathResult {
  std::optional<std::vector<int>> path;  // arc ids, s -> s'
  std::optional<SBarrier> barrier;
};

// Search state left behind by a successful shortest-path run: the graph
// with all contracted fragments trimmed, restricted to arcs of zero
// reduced length, plus the fragment forest for path expansion.
struct TrimmedZeroGraph {
  int node_count = 0;
  int arc_count = 0;
  std::vector<char> present;   // arc exists (positive capacity in the input)
  std::vector<char> zero;      // arc has zero reduced length
  std::vector<char> alive;     // arc not deleted by trimming
  std::vector<int> cur_tail, cur_head;  // endpoints in the trimmed graph
  std::vector<int> arc_mate;            // involution partner per arc
  std::vector<char> live_node;          // node still present after trimming

  struct Frag {
    int base = -1;    // arc entering the fragment; its head is `rep`
    int rep = -1;     // node kept as the contracted representative
    int bridge = -1;  // arc that closed the two branches
    // Tree branches from rep down to the bridge endpoints, as (arc, node)
    // steps in the graph current at contraction time.
    std::vector<std::pair<int, int>> branch_x, branch_y;
    // Structure recorded for laminarity checks: earlier fragments swallowed
    // whole, and node pairs (given by their even member) swallowed fresh.
    std::vector<int> children;
    std::vector<int> fresh_pairs;
  };
  std::vector<Frag> frags;    // in contraction order; index doubles as time
  std::vector<int> maximal;   // indices of fragments never swallowed later

  // Endpoint history: (fragment index, endpoint value just before that
  // fragment's contraction redirected the arc).
  std::vector<std::vector<std::pair<int, int>>> tail_events, head_events;

  // node -> maximal fragment index whose set contains it, or -1
  std::vector<int> node_fragment;

  // Endpoints of arc a in the graph as it was just before fragment `time`
  // was contracted; pass frags.size() (or more) for the final graph.
  int tail_at(int a, int time) const;
  int head_at(int a, int time) const;

  // Arc ids of the trimmed zero-graph (present, zero, alive).
  std::vector<int> trimmed_arcs() const;

  // Interior arcs of the regular path that enters maximal fragment
  // `frag_index` through its base arc and leaves through `exit_arc`
  // (an arc whose trimmed tail is the fragment representative); the
  // base and exit arcs themselves are not included.
  std::vector<int> connector(int frag_index, int exit_arc) const;

  // Original node set of fragment `frag_index` (closure over nesting).
  std::vector<int> fragment_nodes(int frag_index) const;
};

struct SraResult {
  int rdist = 0;
  std::vector<int> shortest_path;  // arc ids in the input graph
  TrimmedZeroGraph tz;
};

// Arcs with positive capacity form the graph; exactly one alternative is
// produced and the barrier case always passes verify_barrier.
RegPathResult find_regular_path(const SkewSymmetricNetwork& g);

// Unit lengths on positive-capacity arcs; either the r-distance with the
// trimmed zero-graph or a barrier proving s' unreachable.
std::variant<SraResult, SBarrier> shortest_unit_sra(const SkewSymmetricNetwork& g);

// Expands a regular path of the trimmed graph (arc ids with consistent
// trimmed endpoints, s -> s') into a regular path of the input graph.
std::vector<int> restore_path(const TrimmedZeroGraph& tz,
                              const std::vector<int>& trimmed_path);

// Checks conditions (B1)-(B7) over positive-capacity arcs; returns the
// first violated condition, or nothing when the barrier is valid.
std::optional<std::string> verify_barrier(const SkewSymmetricNetwork& g,
                                          const SBarrier& b);

// Standalone trimming of one fragment.  Arc ids are preserved: redirected
// arcs keep their id with new endpoints, arcs internal to the fragment are
// dropped by setting their capacity to zero, and removed nodes are left
// isolated.  The base and anti-base arcs are kept untouched.
SkewSymmetricNetwork trim_fragment(const SkewSymmetricNetwork& g,
                                   const Fragment& phi);

}  // namespace ssf
