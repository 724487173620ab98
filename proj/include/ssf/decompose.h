// Symmetric flow decomposition: any feasible flow splits into at most m
// elementary flows (mate pairs of simple paths or cycles with a common
// integer unit count), built by growing a flow-supported regular path and
// peeling off the cycle or end-to-end path it closes.
#pragma once

#include <utility>
#include <vector>

#include "ssf/core.h"

namespace ssf {

struct SymmetricDecomposition {
  std::vector<ElementaryFlow> members;
};

// Splits a feasible flow into elementary members; the sum of all members
// (each counted on its path and mate path) equals the input arc-for-arc,
// and the member count never exceeds the arc count.
SymmetricDecomposition symmetric_decomposition(const SkewSymmetricNetwork& net,
                                               const ISFlow& f);

// Total flow entering and leaving a self-symmetric node set; both totals
// are even for every feasible flow.
std::pair<Cap, Cap> crossing_parity(const SkewSymmetricNetwork& net,
                                    const ISFlow& f,
                                    const std::vector<int>& S);

}  // namespace ssf
