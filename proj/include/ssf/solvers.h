// Maximum symmetric integer flow, four ways, one output contract: the
// flow together with an odd-barrier certificate of the same capacity.
//
//  - augmenting: plain augmentation via regular reachability on the
//    residual split-graph; pseudo-polynomial but simple.
//  - sapm: shortest augmenting paths; augmentation lengths never decrease.
//  - anstee: ordinary max-flow pre-solution, halved and repaired, then a
//    linear number of augmentations.
//  - sbfm: phases of shortest blocking flows built from totally blocking
//    flows on a trimmed acyclic network; lengths strictly increase.
#pragma once

#include <vector>

#include "ssf/core.h"

namespace ssf {

struct SolveReport {
  ISFlow flow;
  OddBarrier certificate;
  int phase_or_iteration_count = 0;
  // shortest augmentation length per iteration (sapm) or phase (sbfm)
  std::vector<int> rdists;
};

SolveReport max_isflow_augmenting(const SkewSymmetricNetwork& net);
SolveReport max_isflow_sapm(const SkewSymmetricNetwork& net);
SolveReport max_isflow_anstee(const SkewSymmetricNetwork& net);
SolveReport max_isflow_sbfm(const SkewSymmetricNetwork& net);

// A barrier of the final residual split-graph carries over verbatim: its
// node sets form an odd barrier whose capacity equals the flow value.
// Verification failure throws (it would mean the solver is wrong).
OddBarrier restore_odd_barrier(const SkewSymmetricNetwork& net, const ISFlow& f,
                               const SBarrier& split_barrier);

// Sum over inner nodes of min(total out-capacity, total in-capacity); the
// phase count of sbfm stays within 2 * sqrt of this.
Cap transit_capacity_sum(const SkewSymmetricNetwork& net);

}  // namespace ssf
