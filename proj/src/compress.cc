#include "ssf/compress.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ssf/certify.h"

namespace ssf {

namespace {

bool middle_arc(const Arc& a) { return a.tail >= 2 && a.head >= 2; }

// Middle-layer adjacency: left nodes are the even non-terminal nodes,
// right nodes the odd ones; aid[x][y] is the arc id or -1.
struct Layer {
  int n = 0;
  std::vector<std::vector<int>> aid;
  std::vector<int> degx;
  long long arcs = 0;

  explicit Layer(const SkewSymmetricNetwork& net) {
    if (net.node_count < 2 || net.node_count % 2)
      throw std::invalid_argument("network lacks a terminal pair");
    n = (net.node_count - 2) / 2;
    aid.assign(n, std::vector<int>(n, -1));
    degx.assign(n, 0);
    for (int a = 0; a < net.arc_count(); ++a) {
      const Arc& e = net.arcs[a];
      if (!middle_arc(e)) continue;
      if (e.tail % 2 || e.head % 2 == 0)
        throw std::invalid_argument("middle layer is not bipartite");
      if (e.head == SkewSymmetricNetwork::node_mate(e.tail))
        throw std::invalid_argument("arc joins a node to its own mate");
      if (e.cap != 1)
        throw std::invalid_argument("middle layer is not all-unit");
      int x = (e.tail - 2) / 2, y = (e.head - 3) / 2;
      if (aid[x][y] != -1)
        throw std::invalid_argument("parallel arcs in the middle layer");
      aid[x][y] = a;
      ++degx[x];
      ++arcs;
    }
  }

  void remove(int x, int y) {
    if (aid[x][y] < 0) throw std::logic_error("removing a missing layer arc");
    aid[x][y] = -1;
    --degx[x];
    --arcs;
  }
};

}  // namespace

Cap CliquePartition::size() const {
  Cap s = 0;
  for (const auto& c : cliques)
    s += static_cast<Cap>(c.a_nodes.size()) + static_cast<Cap>(c.b_nodes.size());
  return s;
}

std::pair<int, int> delta_clique_dims(int n, long long m, double delta) {
  if (n < 1 || m < 1) return {0, 0};
  int asz = static_cast<int>(std::ceil(std::pow(n, 1.0 - delta)));
  double denom = std::log(2.0 * n * static_cast<double>(n) /
                          static_cast<double>(m));
  int bsz = denom <= 0.0
                ? n
                : static_cast<int>(std::floor(delta * std::log(n) / denom));
  return {asz, bsz};
}

CliquePartition symmetric_clique_partition(const SkewSymmetricNetwork& net,
                                           double delta) {
  if (!(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("delta must lie in (0, 1/2)");
  Layer lay(net);
  const int n = lay.n;
  CliquePartition part;

  auto emit_pair = [&](const std::vector<int>& ax, const std::vector<int>& by) {
    // indices of left / right layer nodes; the mirror swaps the roles
    BipClique c, cm;
    for (int x : ax) {
      c.a_nodes.push_back(2 * x + 2);
      cm.b_nodes.push_back(2 * x + 3);
    }
    for (int y : by) {
      c.b_nodes.push_back(2 * y + 3);
      cm.a_nodes.push_back(2 * y + 2);
    }
    for (int x : ax)
      for (int y : by) lay.remove(x, y);
    for (int y : by)
      for (int x : ax) lay.remove(y, x);  // the mirror's arcs
    part.cliques.push_back(std::move(c));
    part.cliques.push_back(std::move(cm));
  };

  std::vector<int> order(n), cnt(n);
  while (static_cast<double>(lay.arcs) >= 2.0 * std::pow(n, 2.0 - delta)) {
    auto [asz, bsz] = delta_clique_dims(n, lay.arcs, delta);
    if (bsz < 1) break;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
      return lay.degx[i] > lay.degx[j];
    });
    int live = 0;
    while (live < n && lay.degx[order[live]] > 0) ++live;
    int k = std::min(asz, live);
    bool made = false;
    while (k >= 1 && !made) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (int i = 0; i < k; ++i) {
        int x = order[i];
        for (int y = 0; y < n; ++y)
          if (lay.aid[x][y] != -1) ++cnt[y];
      }
      std::vector<int> common;
      for (int y = 0; y < n && static_cast<int>(common.size()) < bsz; ++y)
        if (cnt[y] == k) common.push_back(y);
      if (static_cast<int>(common.size()) >= bsz) {
        std::vector<int> ax(order.begin(), order.begin() + k);
        emit_pair(ax, common);
        made = true;
      } else {
        k = k == 1 ? 0 : std::max(1, (3 * k) / 4);
      }
    }
    if (!made) break;
  }
  // leftovers become single-arc cliques, still mirror-paired
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (lay.aid[x][y] != -1 && x < y) emit_pair({x}, {y});
  return part;
}

StarTransform compress_to_stars(const SkewSymmetricNetwork& net,
                                const CliquePartition& part) {
  const int V = net.node_count, m = net.arc_count();
  if (V % 2) throw std::invalid_argument("odd node count");
  const int k = static_cast<int>(part.cliques.size());
  if (k % 2) throw std::invalid_argument("partition is not mirror-paired");
  // arc lookup for the (parallel-free) middle layer
  std::vector<std::vector<std::pair<int, int>>> by_tail(V);
  for (int a = 0; a < m; ++a)
    if (middle_arc(net.arcs[a]))
      by_tail[net.arcs[a].tail].push_back({net.arcs[a].head, a});
  auto lookup = [&](int x, int y) {
    for (auto& [h, a] : by_tail[x])
      if (h == y) return a;
    return -1;
  };

  StarTransform st;
  st.center.assign(k, -1);
  st.in_arcs.resize(k);
  st.out_arcs.resize(k);
  st.clique_arcs.resize(k);
  // a star only pays off when it has fewer arcs than the clique; smaller
  // cliques (anything with a single-node side) are copied verbatim
  std::vector<char> starred(k, 0);
  int centers = 0;
  for (int j = 0; j + 1 < k; j += 2) {
    const BipClique& c = part.cliques[j];
    if (c.a_nodes.size() + c.b_nodes.size() <
        c.a_nodes.size() * c.b_nodes.size()) {
      starred[j] = starred[j + 1] = 1;
      st.center[j] = V + centers++;
      st.center[j + 1] = V + centers++;
    }
  }
  st.net.node_count = V + centers;
  std::vector<char> covered(m, 0), plain(m, 0);
  for (int j = 0; j < k; ++j) {
    const BipClique& c = part.cliques[j];
    if (c.a_nodes.empty() || c.b_nodes.empty())
      throw std::invalid_argument("empty clique side");
    st.clique_arcs[j].reserve(c.a_nodes.size() * c.b_nodes.size());
    for (int x : c.a_nodes)
      for (int y : c.b_nodes) {
        int a = lookup(x, y);
        if (a < 0) throw std::invalid_argument("clique arc missing");
        if (net.arcs[a].cap != 1)
          throw std::invalid_argument("clique arc is not unit");
        if (covered[a])
          throw std::invalid_argument("partition covers an arc twice");
        covered[a] = 1;
        plain[a] = !starred[j];
        st.clique_arcs[j].push_back(a);
      }
  }
  for (int j = 0; j + 1 < k; j += 2) {
    const BipClique &c = part.cliques[j], &cm = part.cliques[j + 1];
    if (cm.a_nodes.size() != c.b_nodes.size() ||
        cm.b_nodes.size() != c.a_nodes.size())
      throw std::invalid_argument("mirror clique sizes disagree");
    for (size_t i = 0; i < c.a_nodes.size(); ++i)
      if (cm.b_nodes[i] != SkewSymmetricNetwork::node_mate(c.a_nodes[i]))
        throw std::invalid_argument("mirror clique is not the mate image");
    for (size_t i = 0; i < c.b_nodes.size(); ++i)
      if (cm.a_nodes[i] != SkewSymmetricNetwork::node_mate(c.b_nodes[i]))
        throw std::invalid_argument("mirror clique is not the mate image");
    if (!starred[j]) continue;
    // entering star arcs of one clique are mates of the leaving star arcs
    // of its mirror
    for (int x : c.a_nodes) {
      int id = st.net.add_arc_pair(x, st.center[j], 1);
      st.in_arcs[j].push_back(id);
      st.out_arcs[j + 1].push_back(st.net.arcs[id].mate);
    }
    for (int x : cm.a_nodes) {
      int id = st.net.add_arc_pair(x, st.center[j + 1], 1);
      st.in_arcs[j + 1].push_back(id);
      st.out_arcs[j].push_back(st.net.arcs[id].mate);
    }
  }
  for (int a = 0; a < m; ++a) {
    int am = net.arcs[a].mate;
    if (covered[a] != covered[am])
      throw std::invalid_argument("partition split a mate pair");
    if (!covered[a] && middle_arc(net.arcs[a]))
      throw std::invalid_argument("partition misses a middle-layer arc");
  }
  st.arc_orig.assign(st.net.arc_count(), -1);
  for (int a = 0; a < m; ++a) {
    int am = net.arcs[a].mate;
    if ((covered[a] && !plain[a]) || a > am) continue;
    int id = st.net.add_arc_pair(net.arcs[a].tail, net.arcs[a].head,
                                 net.arcs[a].cap);
    st.arc_orig.push_back(a);
    st.arc_orig.push_back(am);
    if (st.net.arcs[id].tail != net.arcs[a].tail)
      throw std::logic_error("copied arc endpoints moved");
  }
  return st;
}

ISFlow decompress_flow(const SkewSymmetricNetwork& orig,
                       const StarTransform& st, const ISFlow& fstar) {
  {
    auto bad = verify_isflow(st.net, fstar);
    if (!bad.empty())
      throw std::invalid_argument("infeasible compressed flow: " + bad[0]);
  }
  ISFlow f;
  f.on_arc.assign(orig.arc_count(), 0);
  for (int c = 0; c < st.net.arc_count(); ++c)
    if (st.arc_orig[c] >= 0) f.on_arc[st.arc_orig[c]] = fstar.on_arc[c];
  for (size_t j = 0; j + 1 < st.center.size(); j += 2) {
    size_t bw = st.out_arcs[j].size();
    std::vector<int> xs, ys;
    for (size_t i = 0; i < st.in_arcs[j].size(); ++i)
      if (fstar.on_arc[st.in_arcs[j][i]] > 0) xs.push_back(static_cast<int>(i));
    for (size_t i = 0; i < bw; ++i)
      if (fstar.on_arc[st.out_arcs[j][i]] > 0) ys.push_back(static_cast<int>(i));
    if (xs.size() != ys.size())
      throw std::logic_error("star units do not balance");
    for (size_t t = 0; t < xs.size(); ++t) {
      int a = st.clique_arcs[j][xs[t] * bw + ys[t]];
      f.on_arc[a] += 1;
      f.on_arc[orig.arcs[a].mate] += 1;
    }
  }
  f.value = 0;
  for (int a = 0; a < orig.arc_count(); ++a) {
    if (orig.arcs[a].tail == 0) f.value += f.on_arc[a];
    if (orig.arcs[a].head == 0) f.value -= f.on_arc[a];
  }
  auto bad = verify_isflow(orig, f);
  if (!bad.empty())
    throw std::logic_error("decompressed flow infeasible: " + bad[0]);
  if (f.value != fstar.value)
    throw std::logic_error("decompression changed the flow value");
  return f;
}

}  // namespace ssf
