// Clique compression of dense matching-derived networks: the bipartite
// middle layer is partitioned into complete bipartite cliques closed under
// the involution, and each clique is replaced by a star through a fresh
// node pair.  Source-to-sink paths correspond one-to-one, so the maximum
// flow value is preserved while dense instances lose arcs.
#pragma once

#include <utility>
#include <vector>

#include "ssf/core.h"

namespace ssf {

// Complete bipartite subgraph with arcs a_nodes x b_nodes.
struct BipClique {
  std::vector<int> a_nodes, b_nodes;
};

// Mate cliques sit at paired indices: clique 2j+1 is the element-wise
// mirror of clique 2j (a = mates of b, b = mates of a).
struct CliquePartition {
  std::vector<BipClique> cliques;

  Cap size() const;  // sum of |A| + |B| over all cliques
};

// Target dimensions of one extracted clique for a middle layer with
// `n` nodes per side and `m` arcs: (ceil(n^(1-delta)), floor(delta *
// log n / log(2n^2/m))).
std::pair<int, int> delta_clique_dims(int n, long long m, double delta);

// Greedy partition of the middle-layer arcs: while the layer keeps at
// least 2n^(2-delta) arcs and the target B-side is nonempty, take the
// highest-degree left nodes (fewer on failure), keep a common
// neighborhood of the target size, and remove the clique together with
// its mirror.  Whatever remains becomes single-arc cliques.
CliquePartition symmetric_clique_partition(const SkewSymmetricNetwork& net,
                                           double delta);

struct StarTransform {
  SkewSymmetricNetwork net;   // compressed network
  std::vector<int> center;    // clique index -> star center node, or -1
                              // when the clique's arcs were copied verbatim
                              // (a star would not have been smaller)
  std::vector<int> arc_orig;  // compressed arc -> original arc id, -1 = star arc
  // Per clique: star arc ids aligned with a_nodes / b_nodes, and the
  // original arc ids in a_nodes-major order.
  std::vector<std::vector<int>> in_arcs, out_arcs;
  std::vector<std::vector<int>> clique_arcs;
};

// Replaces every clique by a star through a fresh node pair; arcs outside
// the partition are copied.  The partition must cover each middle-layer
// arc exactly once, mirror-paired, with unit capacities.
StarTransform compress_to_stars(const SkewSymmetricNetwork& net,
                                const CliquePartition& part);

// Feasible flow on the original network with the same value: copied arcs
// keep their flow, and the units crossing each star are assigned to
// concrete clique arcs (mirrored in the mate clique).
ISFlow decompress_flow(const SkewSymmetricNetwork& orig,
                       const StarTransform& st, const ISFlow& fstar);

}  // namespace ssf
