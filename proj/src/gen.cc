#include "ssf/gen.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace ssf {

SkewSymmetricNetwork gen_random_ssf(int pairs, int arc_pairs, Cap max_cap,
                                    Rng& rng) {
  SkewSymmetricNetwork net;
  net.node_count = 2 * (pairs + 1);
  std::uniform_int_distribution<int> node(0, net.node_count - 1);
  std::uniform_int_distribution<Cap> cap(0, max_cap);
  for (int i = 0; i < arc_pairs; ++i) {
    int tail = node(rng), head = node(rng);
    // avoid trivial noise arcs: no loops, nothing into s or out of s'
    if (tail == head || head == net.source() || tail == net.sink()) {
      --i;
      continue;
    }
    net.add_arc_pair(tail, head, cap(rng));
  }
  return net;
}

SkewSymmetricNetwork gen_random_acyclic_ssf(int pairs, int arc_pairs,
                                            Cap max_cap, Rng& rng) {
  SkewSymmetricNetwork net;
  net.node_count = 2 * (pairs + 1);
  std::vector<int> rank(net.node_count);
  rank[0] = -(pairs + 1);
  rank[1] = pairs + 1;
  for (int p = 1; p <= pairs; ++p) {
    int sign = (rng() & 1) ? 1 : -1;
    rank[2 * p] = sign * p;
    rank[2 * p + 1] = -sign * p;
  }
  std::uniform_int_distribution<int> node(0, net.node_count - 1);
  std::uniform_int_distribution<Cap> cap(0, max_cap);
  for (int i = 0; i < arc_pairs; ++i) {
    int tail = node(rng), head = node(rng);
    if (rank[tail] >= rank[head]) {
      --i;
      continue;
    }
    net.add_arc_pair(tail, head, cap(rng));
  }
  return net;
}

std::vector<std::pair<int, int>> gen_random_graph(int n, int m, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  if (n < 2) return edges;
  std::set<std::pair<int, int>> seen;
  std::uniform_int_distribution<int> node(0, n - 1);
  long long possible = static_cast<long long>(n) * (n - 1) / 2;
  m = static_cast<int>(std::min<long long>(m, possible));
  while (static_cast<int>(edges.size()) < m) {
    int a = node(rng), b = node(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (seen.insert({a, b}).second) edges.push_back({a, b});
  }
  return edges;
}

std::vector<std::pair<int, int>> gen_dense_graph(int n, Rng& rng) {
  long long target = static_cast<long long>(std::pow(n, 1.85));
  target = std::min(target, static_cast<long long>(n) * (n - 1) / 2);
  return gen_random_graph(n, static_cast<int>(target), rng);
}

}  // namespace ssf
