#include "ssf/reductions.h"

#include <algorithm>
#include <stdexcept>

#include "ssf/certify.h"

namespace ssf {

MatchingInstance MatchingInstance::cardinality(
    int n, std::vector<std::pair<int, int>> edges) {
  MatchingInstance inst;
  inst.n = n;
  inst.edges = std::move(edges);
  inst.u0.assign(inst.edges.size(), 0);
  inst.u.assign(inst.edges.size(), 1);
  inst.b0.assign(n, 0);
  inst.b.assign(n, 1);
  return inst;
}

std::pair<BoundedNetwork, BackMap> matching_to_network(
    const MatchingInstance& inst) {
  const int n = inst.n;
  const int me = static_cast<int>(inst.edges.size());
  if (static_cast<int>(inst.u0.size()) != me ||
      static_cast<int>(inst.u.size()) != me ||
      static_cast<int>(inst.b0.size()) != n ||
      static_cast<int>(inst.b.size()) != n)
    throw std::invalid_argument("bound vector size mismatch");
  for (int v = 0; v < n; ++v) {
    if (inst.b0[v] < 0 || inst.b0[v] > inst.b[v])
      throw std::invalid_argument("node bounds violated at " +
                                  std::to_string(v));
    if (inst.infinite >= 0 && inst.b[v] >= inst.infinite)
      throw std::invalid_argument("infinite node bounds are not supported");
  }
  // effective edge uppers: resolve the infinity sentinel against the
  // (finite) node bounds, which dominate it anyway
  std::vector<Cap> ue(me);
  for (int e = 0; e < me; ++e) {
    auto [v, w] = inst.edges[e];
    if (v < 0 || v >= n || w < 0 || w >= n || v == w)
      throw std::invalid_argument("bad edge " + std::to_string(e));
    ue[e] = inst.u[e];
    if (inst.infinite >= 0 && ue[e] >= inst.infinite)
      ue[e] = std::min(inst.b[v], inst.b[w]);
    if (inst.u0[e] < 0 || inst.u0[e] > ue[e])
      throw std::invalid_argument("edge bounds violated at " +
                                  std::to_string(e));
  }
  // node uppers clamped to what the incident edges can carry
  std::vector<Cap> be(inst.b);
  {
    std::vector<Cap> room(n, 0);
    for (int e = 0; e < me; ++e) {
      room[inst.edges[e].first] += ue[e];
      room[inst.edges[e].second] += ue[e];
    }
    for (int v = 0; v < n; ++v)
      be[v] = std::max(inst.b0[v], std::min(inst.b[v], room[v]));
  }

  BoundedNetwork bn;
  BackMap bm;
  bn.net.node_count = 2 * n + 2;
  auto v1 = [](int v) { return 2 * v + 2; };
  auto v2 = [](int v) { return 2 * v + 3; };
  for (int v = 0; v < n; ++v) {
    bn.net.add_arc_pair(0, v1(v), be[v]);  // and (v2, s')
    bn.lower.push_back(inst.b0[v]);
    bn.lower.push_back(inst.b0[v]);
    bm.kind.push_back(BackMap::Kind::node);
    bm.kind.push_back(BackMap::Kind::node);
    bm.orig.push_back(v);
    bm.orig.push_back(v);
  }
  for (int e = 0; e < me; ++e) {
    auto [v, w] = inst.edges[e];
    int id = bn.net.add_arc_pair(v1(v), v2(w), ue[e]);  // and (w1, v2)
    bn.lower.push_back(inst.u0[e]);
    bn.lower.push_back(inst.u0[e]);
    bm.kind.push_back(BackMap::Kind::edge);
    bm.kind.push_back(BackMap::Kind::edge);
    bm.orig.push_back(e);
    bm.orig.push_back(e);
    bm.edge_first.push_back(id);
  }
  return {std::move(bn), std::move(bm)};
}

LowerBoundElimination eliminate_lower_bounds(const BoundedNetwork& bn) {
  const int m = bn.net.arc_count();
  if (static_cast<int>(bn.lower.size()) != m)
    throw std::invalid_argument("lower bound vector size mismatch");
  for (int i = 0; i < m; ++i) {
    if (bn.lower[i] < 0 || bn.lower[i] > bn.net.arcs[i].cap)
      throw std::invalid_argument("bounds violated on arc " +
                                  std::to_string(i));
    if (bn.lower[i] != bn.lower[bn.net.arcs[i].mate])
      throw std::invalid_argument("asymmetric lower bound on arc " +
                                  std::to_string(i));
  }
  LowerBoundElimination out;
  out.lower = bn.lower;
  out.carrier.assign(m, -1);
  out.net.node_count = bn.net.node_count;
  for (int i = 0; i < m; ++i) {
    int j = bn.net.arcs[i].mate;
    if (j < i) continue;
    const Arc& a = bn.net.arcs[i];
    Cap l = bn.lower[i];
    if (l == 0) {
      int id = out.net.add_arc_pair(a.tail, a.head, a.cap);
      out.carrier[i] = id;
      out.carrier[j] = out.net.arcs[id].mate;
      continue;
    }
    // subdivide (x,y) into (x,v),(v,w),(w,y); force l units through the
    // detours (s,w) and (v,s'); the mate pieces come along symmetrically
    int v = out.net.node_count, w = v + 2;
    out.net.node_count += 4;
    out.net.add_arc_pair(a.tail, v, a.cap);
    int mid = out.net.add_arc_pair(v, w, a.cap - l);
    int end = out.net.add_arc_pair(w, a.head, a.cap);
    int e1 = out.net.add_arc_pair(0, w, l);
    int e2 = out.net.add_arc_pair(v, 1, l);
    out.extra_arcs.insert(out.extra_arcs.end(),
                          {e1, out.net.arcs[e1].mate, e2, out.net.arcs[e2].mate});
    out.carrier[i] = mid;
    out.carrier[j] = out.net.arcs[mid].mate;
    (void)end;
  }
  return out;
}

bool LowerBoundElimination::feasible(const ISFlow& f) const {
  for (int a : extra_arcs)
    if (f.on_arc[a] != net.arcs[a].cap) return false;
  return true;
}

ISFlow LowerBoundElimination::induce(const SkewSymmetricNetwork& orig,
                                     const ISFlow& f) const {
  ISFlow out;
  out.on_arc.resize(orig.arc_count());
  for (int i = 0; i < orig.arc_count(); ++i)
    out.on_arc[i] = lower[i] + f.on_arc[carrier[i]];
  for (int i = 0; i < orig.arc_count(); ++i) {
    if (orig.arcs[i].tail == orig.source()) out.value += out.on_arc[i];
    if (orig.arcs[i].head == orig.source()) out.value -= out.on_arc[i];
  }
  return out;
}

std::vector<Cap> flow_to_matching(const BoundedNetwork& bn, const ISFlow& f,
                                  const BackMap& bm) {
  auto bad = verify_isflow(bn.net, f);
  if (!bad.empty()) throw std::invalid_argument("infeasible flow: " + bad[0]);
  for (int i = 0; i < bn.net.arc_count(); ++i)
    if (f.on_arc[i] < bn.lower[i])
      throw std::invalid_argument("flow below lower bound on arc " +
                                  std::to_string(i));
  std::vector<Cap> h;
  h.reserve(bm.edge_first.size());
  for (int a : bm.edge_first) h.push_back(f.on_arc[a]);
  return h;
}

UnitSplit unit_split(const SkewSymmetricNetwork& net, Cap infinite) {
  UnitSplit out;
  out.net.node_count = net.node_count;
  for (int i = 0; i < net.arc_count(); ++i) {
    int j = net.arcs[i].mate;
    if (j < i) continue;
    const Arc& a = net.arcs[i];
    if (infinite >= 0 && a.cap >= infinite)
      throw std::invalid_argument("cannot unit-split an unbounded arc");
    for (Cap c = 0; c < a.cap; ++c) {
      out.net.add_arc_pair(a.tail, a.head, 1);
      out.orig.push_back(i);
      out.orig.push_back(j);
    }
  }
  return out;
}

}  // namespace ssf
