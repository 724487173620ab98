#include "ssf/solvers.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

#include "ssf/blockphase.h"
#include "ssf/certify.h"
#include "ssf/decompose.h"
#include "ssf/regpath.h"

namespace ssf {

namespace {

std::vector<Cap> caps_of(const SkewSymmetricNetwork& g) {
  std::vector<Cap> c;
  c.reserve(g.arc_count());
  for (const Arc& a : g.arcs) c.push_back(a.cap);
  return c;
}

void require_valid(const SkewSymmetricNetwork& net) {
  auto errs = validate_network(net);
  if (!errs.empty()) throw std::invalid_argument("invalid network: " + errs[0]);
}

Cap value_of(const SkewSymmetricNetwork& net, const std::vector<Cap>& on_arc) {
  Cap v = 0;
  for (int a = 0; a < net.arc_count(); ++a) {
    if (net.arcs[a].tail == net.source()) v += on_arc[a];
    if (net.arcs[a].head == net.source()) v -= on_arc[a];
  }
  return v;
}

// One augmentation on the residual split-graph; false plus a barrier when
// the flow is maximum.  `shortest` switches between plain reachability and
// the shortest-path search; len_out receives the augmentation length.
bool augment_once(const SkewSymmetricNetwork& net, ISFlow& f, bool shortest,
                  SBarrier* barrier, int* len_out) {
  ResidualNetwork res = residual(net, f);
  std::vector<Cap> uf = caps_of(res.g);
  SplitGraph sp = build_split_graph(res.g, uf);
  std::vector<int> split_path;
  if (shortest) {
    auto r = shortest_unit_sra(sp.g);
    if (std::holds_alternative<SBarrier>(r)) {
      *barrier = std::get<SBarrier>(std::move(r));
      return false;
    }
    SraResult& sra = std::get<SraResult>(r);
    split_path = std::move(sra.shortest_path);
    if (len_out) *len_out = sra.rdist;
  } else {
    auto r = find_regular_path(sp.g);
    if (r.barrier) {
      *barrier = std::move(*r.barrier);
      return false;
    }
    split_path = std::move(*r.path);
    if (len_out) *len_out = static_cast<int>(split_path.size());
  }
  std::vector<int> image;
  image.reserve(split_path.size());
  for (int a : split_path) image.push_back(sp.omega[a]);
  Cap delta = path_capacity(res.g, uf, image);
  if (delta < 1) throw std::logic_error("augmenting path without capacity");
  std::vector<Cap> g(res.g.arc_count(), 0);
  for (int a : image) {
    g[a] += delta;
    g[res.g.arcs[a].mate] += delta;
  }
  f = superpose(net, f, g);
  return true;
}

}  // namespace

OddBarrier restore_odd_barrier(const SkewSymmetricNetwork& net, const ISFlow& f,
                               const SBarrier& split_barrier) {
  OddBarrier b;
  b.A = split_barrier.A;
  b.X = split_barrier.X;
  b.capacity = odd_barrier_capacity(net, b);
  if (auto bad = verify_odd_barrier(net, b))
    throw std::logic_error("certificate restoration failed: " + *bad);
  if (b.capacity != f.value)
    throw std::logic_error("certificate capacity differs from the flow value");
  return b;
}

Cap transit_capacity_sum(const SkewSymmetricNetwork& net) {
  std::vector<Cap> out(net.node_count, 0), in(net.node_count, 0);
  for (const Arc& a : net.arcs) {
    out[a.tail] += a.cap;
    in[a.head] += a.cap;
  }
  Cap total = 0;
  for (int v = 2; v < net.node_count; ++v) total += std::min(out[v], in[v]);
  return total;
}

SolveReport max_isflow_augmenting(const SkewSymmetricNetwork& net) {
  require_valid(net);
  SolveReport rep;
  rep.flow = zero_flow(net);
  SBarrier sb;
  while (augment_once(net, rep.flow, false, &sb, nullptr))
    ++rep.phase_or_iteration_count;
  rep.certificate = restore_odd_barrier(net, rep.flow, sb);
  return rep;
}

SolveReport max_isflow_sapm(const SkewSymmetricNetwork& net) {
  require_valid(net);
  SolveReport rep;
  rep.flow = zero_flow(net);
  SBarrier sb;
  int len = 0;
  while (augment_once(net, rep.flow, true, &sb, &len)) {
    ++rep.phase_or_iteration_count;
    if (!rep.rdists.empty() && len < rep.rdists.back())
      throw std::logic_error("augmentation length decreased");
    rep.rdists.push_back(len);
  }
  rep.certificate = restore_odd_barrier(net, rep.flow, sb);
  return rep;
}

SolveReport max_isflow_sbfm(const SkewSymmetricNetwork& net) {
  require_valid(net);
  SolveReport rep;
  rep.flow = zero_flow(net);
  const double phase_root = 2.0 * std::sqrt(
      static_cast<double>(transit_capacity_sum(net)));
  int longer_phases = 0;  // phases whose augmentation length exceeds one
  while (true) {
    ResidualNetwork res = residual(net, rep.flow);
    std::vector<Cap> uf = caps_of(res.g);
    SplitGraph sp = build_split_graph(res.g, uf);
    auto r = shortest_unit_sra(sp.g);
    if (std::holds_alternative<SBarrier>(r)) {
      rep.certificate =
          restore_odd_barrier(net, rep.flow, std::get<SBarrier>(r));
      break;
    }
    const SraResult& sra = std::get<SraResult>(r);
    if (!rep.rdists.empty() && sra.rdist <= rep.rdists.back())
      throw std::logic_error("phase length failed to increase");
    rep.rdists.push_back(sra.rdist);
    ++rep.phase_or_iteration_count;
    if (sra.rdist > 1) ++longer_phases;
    // direct source-to-sink arcs admit a length-1 phase that the transit
    // capacity of inner nodes cannot see; it is excluded from that bound
    if (rep.phase_or_iteration_count > net.node_count - 1 ||
        static_cast<double>(longer_phases) > phase_root + 1e-9)
      throw std::logic_error("phase bound exceeded");

    // the acyclic network behind the trimmed zero-graph
    const TrimmedZeroGraph& tz = sra.tz;
    std::vector<int> trimmed = tz.trimmed_arcs();
    const int rm = res.g.arc_count();
    std::vector<int> tl(rm, -1), hd(rm, -1);
    for (int sa : trimmed) {
      int e = sp.omega[sa];
      tl[e] = tz.cur_tail[sa];
      hd[e] = tz.cur_head[sa];
    }
    SkewSymmetricNetwork hb;
    hb.node_count = net.node_count;
    std::vector<int> hb_of(rm, -1);
    for (int e = 0; e < rm; ++e) {
      if (tl[e] < 0) continue;
      int em = res.g.arcs[e].mate;
      if (tl[em] < 0) throw std::logic_error("zero-graph lost a mate arc");
      if (em < e) continue;
      int id = hb.add_arc_pair(tl[e], hd[e], uf[e]);
      int idm = hb.arcs[id].mate;
      if (hb.arcs[idm].tail != tl[em] || hb.arcs[idm].head != hd[em])
        throw std::logic_error("mate endpoints disagree after trimming");
      hb_of[e] = id;
      hb_of[em] = idm;
    }
    ISFlow gbar = totally_blocking_isflow(hb);
    if (gbar.value <= 0) throw std::logic_error("phase produced no flow");
    std::vector<Cap> g(rm, 0);
    for (int e = 0; e < rm; ++e)
      if (hb_of[e] >= 0) g[e] = gbar.on_arc[hb_of[e]];

    // route the unit crossing each contracted region through its interior
    std::vector<std::vector<int>> out_by_tail(net.node_count);
    for (int sa : trimmed) out_by_tail[tz.cur_tail[sa]].push_back(sa);
    for (int fi : tz.maximal) {
      const auto& fr = tz.frags[fi];
      int ebase = sp.omega[fr.base];
      if (g[ebase] <= 0) continue;
      if (g[ebase] != 1)
        throw std::logic_error("contracted region entered by more than one unit");
      int exit_sa = -1;
      for (int sa : out_by_tail[fr.rep])
        if (g[sp.omega[sa]] > 0) {
          exit_sa = sa;
          break;
        }
      if (exit_sa < 0)
        throw std::logic_error("used contracted region without an exit");
      for (int sa2 : tz.connector(fi, exit_sa)) {
        int e2 = sp.omega[sa2];
        g[e2] += 1;
        g[res.g.arcs[e2].mate] += 1;
      }
    }
    for (int e = 0; e < rm; ++e)
      if (g[e] > uf[e]) throw std::logic_error("phase flow exceeds capacity");
    rep.flow = superpose(net, rep.flow, g);
  }
  return rep;
}

// ---------------------------------------------------------------------
// pre-solution solver

namespace {

// ordinary (asymmetry-blind) max flow, per-arc values
std::vector<Cap> ordinary_max_flow(const SkewSymmetricNetwork& net) {
  const int n = net.node_count, m = net.arc_count();
  // forward/backward edge pairs, standard blocking-flow method
  std::vector<int> eto, enext, ehead(n, -1);
  std::vector<Cap> ecap;
  auto add_edge = [&](int from, int to, Cap cap) {
    eto.push_back(to);
    ecap.push_back(cap);
    enext.push_back(ehead[from]);
    ehead[from] = static_cast<int>(eto.size()) - 1;
  };
  for (const Arc& a : net.arcs) {
    add_edge(a.tail, a.head, a.cap);
    add_edge(a.head, a.tail, 0);
  }
  std::vector<int> level(n), it(n), queue;
  auto bfs = [&]() {
    level.assign(n, -1);
    queue.clear();
    queue.push_back(0);
    level[0] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int e = ehead[v]; e >= 0; e = enext[e])
        if (ecap[e] > 0 && level[eto[e]] < 0) {
          level[eto[e]] = level[v] + 1;
          queue.push_back(eto[e]);
        }
    }
    return level[1] >= 0;
  };
  auto dfs = [&](auto&& self, int v, Cap lim) -> Cap {
    if (v == 1) return lim;
    for (int& e = it[v]; e >= 0; e = enext[e]) {
      int w = eto[e];
      if (ecap[e] <= 0 || level[w] != level[v] + 1) continue;
      Cap got = self(self, w, std::min(lim, ecap[e]));
      if (got > 0) {
        ecap[e] -= got;
        ecap[e ^ 1] += got;
        return got;
      }
    }
    return 0;
  };
  while (bfs()) {
    for (int v = 0; v < n; ++v) it[v] = ehead[v];
    Cap inf = 1;
    for (const Arc& a : net.arcs) inf += a.cap;
    while (dfs(dfs, 0, inf) > 0) {
    }
  }
  std::vector<Cap> g(m);
  for (int a = 0; a < m; ++a) g[a] = ecap[2 * a + 1];  // backward = flow
  return g;
}

// a half of a self-symmetric cycle: nodes w0..wr with wr the mate of w0
struct Half {
  std::vector<int> nodes;
  std::vector<int> arcs;
};

struct HalfRepair {
  const SkewSymmetricNetwork& net;
  std::vector<Cap>& h2;  // doubled flow values, adjusted in place

  // push one doubled half-unit along the walk, mirrored onto mate arcs
  void walk_adjust(int start, const std::vector<int>& arcs, int expect_end) {
    int at = start;
    for (int e : arcs) {
      Cap s;
      if (net.arcs[e].tail == at) {
        s = 1;
        at = net.arcs[e].head;
      } else if (net.arcs[e].head == at) {
        s = -1;
        at = net.arcs[e].tail;
      } else {
        throw std::logic_error("cycle walk left its arcs");
      }
      h2[e] += s;
      h2[net.arcs[e].mate] += s;
      if (h2[e] < 0 || h2[e] > 2 * net.arcs[e].cap)
        throw std::logic_error("cycle repair broke feasibility");
    }
    if (at != expect_end) throw std::logic_error("cycle walk ended elsewhere");
  }

  // half of the cycle from node x to its mate, as a walkable arc list
  std::vector<int> reanchor(const Half& c, int x) const {
    int r = static_cast<int>(c.arcs.size());
    for (int j = 0; j < r; ++j) {
      std::vector<int> out;
      if (c.nodes[j] == x) {
        for (int t = j; t < r; ++t) out.push_back(c.arcs[t]);
        for (int t = 0; t < j; ++t)
          out.push_back(net.arcs[c.arcs[t]].mate);
        return out;
      }
      if (SkewSymmetricNetwork::node_mate(c.nodes[j]) == x) {
        for (int t = j; t < r; ++t)
          out.push_back(net.arcs[c.arcs[t]].mate);
        for (int t = 0; t < j; ++t) out.push_back(c.arcs[t]);
        return out;
      }
    }
    throw std::logic_error("anchor node is not on the cycle");
  }
};

}  // namespace

SolveReport max_isflow_anstee(const SkewSymmetricNetwork& net) {
  require_valid(net);
  const int n = net.node_count, m = net.arc_count();
  std::vector<Cap> g0 = ordinary_max_flow(net);
  std::vector<Cap> h2(m);  // doubled half-integer symmetric flow
  for (int a = 0; a < m; ++a) h2[a] = g0[a] + g0[net.arcs[a].mate];

  HalfRepair rep2{net, h2};
  std::vector<Half> halves;
  {
    // peel the odd-valued subgraph into cycles by a mate-avoiding walk
    std::vector<char> alive(m, 0);
    std::vector<std::vector<int>> inc(n);
    for (int a = 0; a < m; ++a)
      if (h2[a] % 2) {
        alive[a] = 1;
        inc[net.arcs[a].tail].push_back(a);
        inc[net.arcs[a].head].push_back(a);
      }
    auto pick_arc = [&](int v, int forbidden) {
      int best = -1;
      auto& lst = inc[v];
      for (size_t i = 0; i < lst.size();) {
        if (!alive[lst[i]]) {
          lst[i] = lst.back();
          lst.pop_back();
          continue;
        }
        if (lst[i] != forbidden && (best < 0 || lst[i] < best)) best = lst[i];
        ++i;
      }
      return best;
    };
    std::vector<int> pnodes, parcs, ppos(n, -1);
    int cursor = 0;
    while (true) {
      if (pnodes.empty()) {
        while (cursor < n && pick_arc(cursor, -1) < 0) ++cursor;
        if (cursor == n) break;
        pnodes.push_back(cursor);
        ppos[cursor] = 0;
      }
      int vq = pnodes.back();
      int e = pick_arc(vq, parcs.empty() ? -1 : parcs.back());
      if (e < 0) throw std::logic_error("odd subgraph lost its even degrees");
      int x = net.arcs[e].tail == vq ? net.arcs[e].head : net.arcs[e].tail;
      int xm = SkewSymmetricNetwork::node_mate(x);
      auto drop = [&](int i) {
        // detach the walked piece from position i onward, plus e
        std::vector<int> arcs(parcs.begin() + i, parcs.end());
        arcs.push_back(e);
        for (int a : arcs) {
          alive[a] = 0;
          alive[net.arcs[a].mate] = 0;
        }
        std::vector<int> nodes(pnodes.begin() + i, pnodes.end());
        for (size_t k = i + 1; k < pnodes.size(); ++k) ppos[pnodes[k]] = -1;
        pnodes.resize(i + 1);
        parcs.resize(i);
        return std::pair{std::move(nodes), std::move(arcs)};
      };
      if (ppos[x] >= 0) {
        // closes on a walked node: a pair of mate cycles, cancel right away
        auto [nodes, arcs] = drop(ppos[x]);
        rep2.walk_adjust(x, arcs, x);
      } else if (ppos[xm] >= 0) {
        // closes on the mate of a walked node: half of a self-mate cycle
        auto [nodes, arcs] = drop(ppos[xm]);
        nodes.push_back(x);
        halves.push_back({std::move(nodes), std::move(arcs)});
      } else {
        ppos[x] = static_cast<int>(pnodes.size());
        pnodes.push_back(x);
        parcs.push_back(e);
      }
      if (pnodes.size() == 1 && pick_arc(pnodes[0], -1) < 0) {
        ppos[pnodes[0]] = -1;
        pnodes.clear();
      }
    }
  }

  // cancel self-mate cycles that touch: their halves re-pair into mate
  // cycles through the shared node
  {
    auto nodes_of = [&](const Half& c) {
      std::vector<char> mark(n, 0);
      for (int v : c.nodes) {
        mark[v] = 1;
        mark[SkewSymmetricNetwork::node_mate(v)] = 1;
      }
      return mark;
    };
    bool merged = true;
    while (merged) {
      merged = false;
      for (size_t i = 0; i < halves.size() && !merged; ++i) {
        auto mi = nodes_of(halves[i]);
        for (size_t j = i + 1; j < halves.size() && !merged; ++j) {
          int shared = -1;
          for (int v : halves[j].nodes)
            if (mi[v]) {
              shared = v;
              break;
            }
          if (shared < 0) continue;
          int sm = SkewSymmetricNetwork::node_mate(shared);
          rep2.walk_adjust(shared, rep2.reanchor(halves[i], shared), sm);
          rep2.walk_adjust(sm, rep2.reanchor(halves[j], sm), shared);
          halves.erase(halves.begin() + j);
          halves.erase(halves.begin() + i);
          merged = true;
        }
      }
    }
  }

  // break each remaining cycle between a node and its mate
  std::vector<int> breaks;
  for (const Half& c : halves) {
    int t = -1;
    for (int v : c.nodes) {
      int vm = SkewSymmetricNetwork::node_mate(v);
      if (v > 1 && (t < 0 || v < t)) t = v;
      if (vm > 1 && (t < 0 || vm < t)) t = vm;
    }
    if (t < 0) throw std::logic_error("cycle only touches the terminals");
    rep2.walk_adjust(t, rep2.reanchor(c, t),
                     SkewSymmetricNetwork::node_mate(t));
    breaks.push_back(t);
  }
  for (int a = 0; a < m; ++a)
    if (h2[a] % 2) throw std::logic_error("odd flow survived the repair");

  // reroute the broken units to the terminals via artificial arcs
  ISFlow f;
  f.on_arc.assign(m, 0);
  for (int a = 0; a < m; ++a) f.on_arc[a] = h2[a] / 2;
  if (!breaks.empty()) {
    SkewSymmetricNetwork gp = net;
    ISFlow hp;
    hp.on_arc = f.on_arc;
    for (int t : breaks) {
      gp.add_arc_pair(0, t, 1);
      hp.on_arc.push_back(1);
      hp.on_arc.push_back(1);
    }
    hp.value = value_of(gp, hp.on_arc);
    auto bad = verify_isflow(gp, hp);
    if (!bad.empty())
      throw std::logic_error("rerouted pre-solution infeasible: " + bad[0]);
    auto dec = symmetric_decomposition(gp, hp);
    for (const ElementaryFlow& ef : dec.members) {
      bool artificial = false;
      for (int a : ef.path) artificial |= (a >= m);
      for (int a : ef.mate_path) artificial |= (a >= m);
      if (!artificial) continue;
      if (ef.delta != 1)
        throw std::logic_error("artificial arc carries more than one unit");
      for (int a : ef.path) --hp.on_arc[a];
      for (int a : ef.mate_path) --hp.on_arc[a];
    }
    for (int a = m; a < gp.arc_count(); ++a)
      if (hp.on_arc[a] != 0)
        throw std::logic_error("artificial arc kept flow after extraction");
    f.on_arc.assign(hp.on_arc.begin(), hp.on_arc.begin() + m);
  }
  f.value = value_of(net, f.on_arc);
  {
    auto bad = verify_isflow(net, f);
    if (!bad.empty())
      throw std::logic_error("pre-solution infeasible: " + bad[0]);
  }

  SolveReport rep;
  rep.flow = std::move(f);
  SBarrier sb;
  while (augment_once(net, rep.flow, false, &sb, nullptr))
    ++rep.phase_or_iteration_count;
  rep.certificate = restore_odd_barrier(net, rep.flow, sb);
  return rep;
}

}  // namespace ssf
