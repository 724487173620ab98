#include "ssf/certify.h"

#include <algorithm>
#include <stdexcept>

namespace ssf {

std::vector<std::string> verify_isflow(const SkewSymmetricNetwork& net,
                                       const ISFlow& f) {
  std::vector<std::string> bad;
  const int m = net.arc_count();
  if (static_cast<int>(f.on_arc.size()) != m) {
    bad.push_back("flow vector size mismatch");
    return bad;
  }
  for (int i = 0; i < m; ++i) {
    if (f.on_arc[i] < 0)
      bad.push_back("negative flow on arc " + std::to_string(i));
    if (f.on_arc[i] > net.arcs[i].cap)
      bad.push_back("flow exceeds capacity on arc " + std::to_string(i));
    if (f.on_arc[i] != f.on_arc[net.arcs[i].mate])
      bad.push_back("asymmetric flow on arc " + std::to_string(i));
  }
  std::vector<Cap> div(net.node_count, 0);
  for (int i = 0; i < m; ++i) {
    div[net.arcs[i].tail] += f.on_arc[i];
    div[net.arcs[i].head] -= f.on_arc[i];
  }
  for (int v = 0; v < net.node_count; ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (div[v] != 0)
      bad.push_back("node " + std::to_string(v) + " is not balanced");
  }
  if (div[net.source()] != f.value)
    bad.push_back("declared value differs from source divergence");
  if (div[net.source()] != -div[net.sink()])
    bad.push_back("source and sink divergences do not cancel");
  if (f.value % 2 != 0) bad.push_back("value is odd");
  return bad;
}

namespace {

// Membership tags for barrier node sets.
enum class Part : char { M, A, Aprime, X };

std::optional<std::vector<Part>> classify(const SkewSymmetricNetwork& net,
                                          const std::vector<int>& A,
                                          const std::vector<std::vector<int>>& X,
                                          std::vector<int>* x_index,
                                          std::string* err) {
  std::vector<Part> part(net.node_count, Part::M);
  x_index->assign(net.node_count, -1);
  auto place = [&](int v, Part p, int xi) {
    if (v < 0 || v >= net.node_count) {
      *err = "node id out of range";
      return false;
    }
    if (part[v] != Part::M) {
      *err = "sets are not pairwise disjoint at node " + std::to_string(v);
      return false;
    }
    part[v] = p;
    (*x_index)[v] = xi;
    return true;
  };
  for (int v : A)
    if (!place(v, Part::A, -1)) return std::nullopt;
  for (size_t i = 0; i < X.size(); ++i)
    for (int v : X[i])
      if (!place(v, Part::X, static_cast<int>(i))) return std::nullopt;
  // A' fills in afterwards; overlap with A or any X_i is a violation.
  for (int v : A) {
    int vm = SkewSymmetricNetwork::node_mate(v);
    if (part[vm] == Part::A) {
      *err = "A intersects its mate set at node " + std::to_string(vm);
      return std::nullopt;
    }
    if (part[vm] == Part::X) {
      *err = "mate of A-node " + std::to_string(v) + " lies in an X set";
      return std::nullopt;
    }
    part[vm] = Part::Aprime;
  }
  return part;
}

}  // namespace

Cap odd_barrier_capacity(const SkewSymmetricNetwork& net, const OddBarrier& b) {
  std::vector<char> in_a(net.node_count, 0);
  for (int v : b.A) in_a[v] = 1;
  Cap total = 0;
  for (const Arc& a : net.arcs)
    if (in_a[a.tail] && !in_a[a.head]) total += a.cap;
  return total - static_cast<Cap>(b.X.size());
}

std::optional<std::string> verify_odd_barrier(const SkewSymmetricNetwork& net,
                                              const OddBarrier& b) {
  std::string err;
  std::vector<int> x_index;
  auto part_opt = classify(net, b.A, b.X, &x_index, &err);
  if (!part_opt) return "O1/O2: " + err;
  const std::vector<Part>& part = *part_opt;
  bool s_in_a = false;
  for (int v : b.A) s_in_a |= (v == net.source());
  if (!s_in_a) return "O1: source not in A";
  for (size_t i = 0; i < b.X.size(); ++i) {
    for (int v : b.X[i]) {
      int vm = SkewSymmetricNetwork::node_mate(v);
      if (part[vm] != Part::X || x_index[vm] != static_cast<int>(i))
        return "O3: X" + std::to_string(i + 1) + " is not self-symmetric";
    }
  }
  std::vector<Cap> into_x(b.X.size(), 0);
  for (const Arc& a : net.arcs) {
    Part pt = part[a.tail], ph = part[a.head];
    if (pt == Part::A && ph == Part::X) into_x[x_index[a.head]] += a.cap;
    if (a.cap <= 0) continue;
    if (pt == Part::X && ph == Part::X && x_index[a.tail] != x_index[a.head])
      return "O5: positive arc between X" +
             std::to_string(x_index[a.tail] + 1) + " and X" +
             std::to_string(x_index[a.head] + 1);
    if ((pt == Part::X && ph == Part::M) || (pt == Part::M && ph == Part::X))
      return "O6: positive arc connects an X set and M";
  }
  for (size_t i = 0; i < b.X.size(); ++i)
    if (into_x[i] % 2 == 0)
      return "O4: u(A, X" + std::to_string(i + 1) + ") is even";
  if (b.capacity != odd_barrier_capacity(net, b))
    return "declared capacity differs from u(A, V-A) - k";
  return std::nullopt;
}

namespace {

void check_budget(const SkewSymmetricNetwork& g, const OracleBudget& budget,
                  bool check_caps) {
  if (g.node_count > 2 * budget.max_node_pairs)
    throw std::invalid_argument("oracle budget exceeded: nodes");
  if (g.arc_count() > budget.max_arcs)
    throw std::invalid_argument("oracle budget exceeded: arcs");
  if (check_caps)
    for (const Arc& a : g.arcs)
      if (a.cap > budget.max_capacity)
        throw std::invalid_argument("oracle budget exceeded: capacity");
}

// Any regular walk shortens to a node-simple regular path by removing
// cycles (arc subsets stay regular), so node-simple enumeration is exact.
struct RPathSearch {
  const SkewSymmetricNetwork& g;
  std::vector<std::vector<int>> out;
  std::vector<char> node_used, arc_blocked;
  int best = -1;  // shortest length found, -1 = none

  explicit RPathSearch(const SkewSymmetricNetwork& gg)
      : g(gg),
        out(gg.node_count),
        node_used(gg.node_count, 0),
        arc_blocked(gg.arc_count(), 0) {
    for (int i = 0; i < g.arc_count(); ++i)
      if (g.arcs[i].cap > 0) out[g.arcs[i].tail].push_back(i);
  }

  void dfs(int v, int len) {
    if (v == g.sink()) {
      if (best < 0 || len < best) best = len;
      return;
    }
    if (best >= 0 && len + 1 >= best) return;
    node_used[v] = 1;
    for (int a : out[v]) {
      int w = g.arcs[a].head;
      if (node_used[w] || arc_blocked[a] || arc_blocked[g.arcs[a].mate]) continue;
      arc_blocked[a] = 1;
      dfs(w, len + 1);
      arc_blocked[a] = 0;
      if (best == 1) break;  // cannot improve
    }
    node_used[v] = 0;
  }
};

}  // namespace

bool oracle_rpath(const SkewSymmetricNetwork& g, const OracleBudget& budget) {
  return oracle_rdist(g, budget).has_value();
}

std::optional<int> oracle_rdist(const SkewSymmetricNetwork& g,
                                const OracleBudget& budget) {
  check_budget(g, budget, false);
  RPathSearch search(g);
  search.dfs(g.source(), 0);
  if (search.best < 0) return std::nullopt;
  return search.best;
}

namespace {

// Enumerates symmetric assignments pair by pair, checking conservation at a
// node as soon as every incident arc has a value.
struct FlowSearch {
  const SkewSymmetricNetwork& net;
  std::vector<int> rep;             // representative arc per mate pair
  std::vector<std::vector<int>> done_nodes;  // nodes finalized after pair k
  std::vector<Cap> val;             // per arc
  std::vector<Cap> div;             // running divergence per node
  Cap best = 0;
  std::vector<Cap> best_val;

  explicit FlowSearch(const SkewSymmetricNetwork& n)
      : net(n), val(n.arc_count(), 0), div(n.node_count, 0) {
    for (int i = 0; i < net.arc_count(); ++i)
      if (i < net.arcs[i].mate) rep.push_back(i);
    // last pair index touching each node
    std::vector<int> last(net.node_count, -1);
    for (size_t k = 0; k < rep.size(); ++k) {
      for (int a : {rep[k], net.arcs[rep[k]].mate}) {
        last[net.arcs[a].tail] = static_cast<int>(k);
        last[net.arcs[a].head] = static_cast<int>(k);
      }
    }
    done_nodes.resize(rep.size());
    for (int v = 0; v < net.node_count; ++v)
      if (last[v] >= 0 && v != net.source() && v != net.sink())
        done_nodes[last[v]].push_back(v);
  }

  void assign(int a, Cap c) {
    int am = net.arcs[a].mate;
    val[a] = c;
    div[net.arcs[a].tail] += c;
    div[net.arcs[a].head] -= c;
    if (am != a) {
      val[am] = c;
      div[net.arcs[am].tail] += c;
      div[net.arcs[am].head] -= c;
    }
  }

  void rec(size_t k) {
    if (k == rep.size()) {
      if (best_val.empty() || div[net.source()] > best) {
        best_val = val;
        best = div[net.source()];
      }
      return;
    }
    int a = rep[k];
    for (Cap c = net.arcs[a].cap; c >= 0; --c) {
      assign(a, c);
      bool ok = true;
      for (int v : done_nodes[k]) ok &= (div[v] == 0);
      if (ok) rec(k + 1);
      int am = net.arcs[a].mate;
      val[a] = 0;
      div[net.arcs[a].tail] -= c;
      div[net.arcs[a].head] += c;
      if (am != a) {
        val[am] = 0;
        div[net.arcs[am].tail] -= c;
        div[net.arcs[am].head] += c;
      }
    }
  }
};

}  // namespace

Cap oracle_max_isflow(const SkewSymmetricNetwork& net,
                      const OracleBudget& budget) {
  check_budget(net, budget, true);
  FlowSearch search(net);
  search.rec(0);
  return search.best;
}

ISFlow oracle_max_isflow_witness(const SkewSymmetricNetwork& net,
                                 const OracleBudget& budget) {
  check_budget(net, budget, true);
  FlowSearch search(net);
  search.rec(0);
  ISFlow f;
  f.on_arc = search.best_val;
  f.on_arc.resize(net.arc_count(), 0);
  f.value = search.best;
  return f;
}

int oracle_max_matching(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n > 24 || edges.size() > 40)
    throw std::invalid_argument("oracle budget exceeded");
  std::vector<char> used(n, 0);
  int best = 0;
  // include/exclude DFS over edges with a simple remaining-edges bound
  auto rec = [&](auto&& self, size_t k, int count) -> void {
    best = std::max(best, count);
    if (k == edges.size()) return;
    if (count + static_cast<int>(edges.size() - k) <= best) return;
    auto [a, b] = edges[k];
    if (!used[a] && !used[b]) {
      used[a] = used[b] = 1;
      self(self, k + 1, count + 1);
      used[a] = used[b] = 0;
    }
    self(self, k + 1, count);
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace ssf
