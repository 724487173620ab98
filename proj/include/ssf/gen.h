// Deterministic random-instance generators used by tests, benchmarks and
// the CLI.  All randomness flows from a caller-supplied 64-bit seed.
#pragma once

#include <random>
#include <utility>
#include <vector>

#include "ssf/core.h"

namespace ssf {

using Rng = std::mt19937_64;

// Random skew-symmetric network: `pairs` node pairs plus the terminal pair,
// `arc_pairs` mate pairs of arcs with capacities in [0, max_cap].
SkewSymmetricNetwork gen_random_ssf(int pairs, int arc_pairs, Cap max_cap,
                                    Rng& rng);

// Acyclic variant: nodes get an antisymmetric rank (terminals extreme) and
// every arc increases in rank.
SkewSymmetricNetwork gen_random_acyclic_ssf(int pairs, int arc_pairs,
                                            Cap max_cap, Rng& rng);

// Simple undirected graph: n nodes, up to m distinct edges (no loops).
std::vector<std::pair<int, int>> gen_random_graph(int n, int m, Rng& rng);

// Dense bipartite-flavored undirected graph aiming at m >= n^1.8.
std::vector<std::pair<int, int>> gen_dense_graph(int n, Rng& rng);

}  // namespace ssf
