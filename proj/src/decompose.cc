#include "ssf/decompose.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "ssf/certify.h"

namespace ssf {

namespace {

// One growth-and-peel pass over the remaining flow `fv`, starting from the
// lowest-indexed supported arc.  Returns the peeled member.
struct Peeler {
  const SkewSymmetricNetwork& g;
  std::vector<Cap>& fv;
  std::vector<std::vector<int>> out_all, in_all;

  Peeler(const SkewSymmetricNetwork& gg, std::vector<Cap>& f)
      : g(gg), fv(f), out_all(gg.node_count), in_all(gg.node_count) {
    for (int i = 0; i < g.arc_count(); ++i) {
      out_all[g.arcs[i].tail].push_back(i);
      in_all[g.arcs[i].head].push_back(i);
    }
  }

  std::deque<int> gam;
  std::vector<char> on_arc_flag, on_node_flag;

  void mark(int a) {
    on_arc_flag[a] = 1;
    on_node_flag[g.arcs[a].tail] = 1;
    on_node_flag[g.arcs[a].head] = 1;
  }

  // Lowest-indexed supported arc out of (into) w that keeps the grown path
  // regular: its mate may already lie on the path only at two flow units.
  int choose(int w, bool forward) {
    for (int q : forward ? out_all[w] : in_all[w]) {
      if (fv[q] <= 0) continue;
      if (fv[q] >= 2 || !on_arc_flag[g.arcs[q].mate]) return q;
    }
    throw std::logic_error("flow growth is stuck; input flow is not conserved");
  }

  // The path is node-simple, so a revisited node pins down a unique cycle.
  std::vector<int> cut_cycle_at(int z) {
    std::vector<int> cyc;
    bool in = false;
    for (int a : gam) {
      if (g.arcs[a].tail == z) in = true;
      if (in) cyc.push_back(a);
    }
    return cyc;
  }

  // Grows until a simple cycle closes or both ends sit on {s, s'}; the
  // returned arc list is the member path, cycle-ness via the flag.
  std::vector<int> grow(int start, bool* is_cycle) {
    gam = {start};
    on_arc_flag.assign(g.arc_count(), 0);
    on_node_flag.assign(g.node_count, 0);
    mark(start);
    if (g.arcs[start].tail == g.arcs[start].head) {
      *is_cycle = true;
      return {start};
    }
    // forward from the head of the last arc
    while (true) {
      int w = g.arcs[gam.back()].head;
      if (w == g.source() || w == g.sink()) break;
      int q = choose(w, true);
      int z = g.arcs[q].head;
      if (on_node_flag[z]) {
        gam.push_back(q);
        *is_cycle = true;
        return cut_cycle_at(z);
      }
      gam.push_back(q);
      mark(q);
    }
    // backward from the tail of the first arc
    while (true) {
      int v = g.arcs[gam.front()].tail;
      if (v == g.source() || v == g.sink()) break;
      int p = choose(v, false);
      int x = g.arcs[p].tail;
      if (on_node_flag[x]) {
        gam.push_front(p);
        *is_cycle = true;
        std::vector<int> cyc;
        for (int a : gam) {
          cyc.push_back(a);
          if (g.arcs[a].head == x) break;
        }
        return cyc;
      }
      gam.push_front(p);
      mark(p);
    }
    *is_cycle = g.arcs[gam.front()].tail == g.arcs[gam.back()].head;
    return {gam.begin(), gam.end()};
  }
};

}  // namespace

SymmetricDecomposition symmetric_decomposition(const SkewSymmetricNetwork& net,
                                               const ISFlow& f) {
  auto bad = verify_isflow(net, f);
  if (!bad.empty()) throw std::invalid_argument("infeasible flow: " + bad[0]);

  std::vector<Cap> fv = f.on_arc;
  SymmetricDecomposition dec;
  const int m = net.arc_count();
  while (true) {
    int start = -1;
    for (int i = 0; i < m; ++i)
      if (fv[i] > 0) {
        start = i;
        break;
      }
    if (start < 0) break;
    if (static_cast<int>(dec.members.size()) >= m)
      throw std::logic_error("decomposition exceeds the member bound");

    Peeler peel(net, fv);
    ElementaryFlow g;
    g.path = peel.grow(start, &g.is_cycle);

    std::vector<char> on_p(m, 0);
    for (int a : g.path) on_p[a] = 1;
    Cap delta = -1;
    for (int a : g.path) {
      Cap room = on_p[net.arcs[a].mate] ? fv[a] / 2 : fv[a];
      if (delta < 0 || room < delta) delta = room;
    }
    if (delta <= 0)
      throw std::logic_error("peeled path is not regular for the flow");
    g.delta = delta;
    g.mate_path.reserve(g.path.size());
    for (auto it = g.path.rbegin(); it != g.path.rend(); ++it)
      g.mate_path.push_back(net.arcs[*it].mate);
    for (int a : g.path) {
      fv[a] -= delta;
      fv[net.arcs[a].mate] -= delta;
    }
    dec.members.push_back(std::move(g));
  }
  return dec;
}

std::pair<Cap, Cap> crossing_parity(const SkewSymmetricNetwork& net,
                                    const ISFlow& f,
                                    const std::vector<int>& S) {
  std::vector<char> in_s(net.node_count, 0);
  for (int v : S) {
    if (v < 0 || v >= net.node_count)
      throw std::invalid_argument("node id out of range");
    in_s[v] = 1;
  }
  for (int v : S)
    if (!in_s[SkewSymmetricNetwork::node_mate(v)])
      throw std::invalid_argument("set is not self-symmetric");
  if (static_cast<int>(f.on_arc.size()) != net.arc_count())
    throw std::invalid_argument("flow vector size mismatch");
  Cap in_total = 0, out_total = 0;
  for (int i = 0; i < net.arc_count(); ++i) {
    bool t = in_s[net.arcs[i].tail], h = in_s[net.arcs[i].head];
    if (!t && h) in_total += f.on_arc[i];
    if (t && !h) out_total += f.on_arc[i];
  }
  return {in_total, out_total};
}

}  // namespace ssf
