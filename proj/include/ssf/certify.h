// Independent validators and exhaustive-search oracles.  Everything here is
// deliberately naive: the point is to trust nothing from the fast solvers.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssf/core.h"

namespace ssf {

// Exhaustive procedures refuse inputs larger than this.
struct OracleBudget {
  int max_node_pairs = 10;
  int max_arcs = 24;
  Cap max_capacity = 3;
};

std::vector<std::string> verify_isflow(const SkewSymmetricNetwork& net,
                                       const ISFlow& f);

// Checks all six odd-barrier conditions; returns the first violated one,
// or nothing when the barrier is valid.  Recomputes the capacity.
std::optional<std::string> verify_odd_barrier(const SkewSymmetricNetwork& net,
                                              const OddBarrier& b);

Cap odd_barrier_capacity(const SkewSymmetricNetwork& net, const OddBarrier& b);

// Exhaustive regular-path search (arc-simple walks avoiding mate pairs).
bool oracle_rpath(const SkewSymmetricNetwork& g, const OracleBudget& budget = {});

// Minimum arc count of a regular source-to-sink path, or nothing if none.
std::optional<int> oracle_rdist(const SkewSymmetricNetwork& g,
                                const OracleBudget& budget = {});

// Exhaustive maximum over symmetric integer arc assignments.
Cap oracle_max_isflow(const SkewSymmetricNetwork& net,
                      const OracleBudget& budget = {});

// Same search, but returns one maximum flow itself.
ISFlow oracle_max_isflow_witness(const SkewSymmetricNetwork& net,
                                 const OracleBudget& budget = {});

// Undirected graph given as an edge list over n nodes; exhaustive maximum
// cardinality matching.
int oracle_max_matching(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace ssf
