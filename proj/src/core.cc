#include "ssf/core.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ssf {

int SkewSymmetricNetwork::add_arc_pair(int tail, int head, Cap cap) {
  int id = arc_count();
  arcs.push_back({tail, head, cap, id + 1});
  arcs.push_back({node_mate(head), node_mate(tail), cap, id});
  return id;
}

Cap SkewSymmetricNetwork::infinite_cap() const {
  Cap total = 1;
  for (const Arc& a : arcs) total += a.cap;
  return total;
}

std::vector<std::string> validate_network(const SkewSymmetricNetwork& net) {
  std::vector<std::string> bad;
  auto note = [&](std::string msg) { bad.push_back(std::move(msg)); };
  if (net.node_count <= 0 || net.node_count % 2 != 0)
    note("node_count must be a positive even number");
  const int m = net.arc_count();
  for (int i = 0; i < m; ++i) {
    const Arc& a = net.arcs[i];
    if (a.tail < 0 || a.tail >= net.node_count || a.head < 0 ||
        a.head >= net.node_count) {
      note("arc " + std::to_string(i) + " has endpoint out of range");
      continue;
    }
    if (a.cap < 0) note("arc " + std::to_string(i) + " has negative capacity");
    if (a.mate < 0 || a.mate >= m) {
      note("arc " + std::to_string(i) + " has mate id out of range");
      continue;
    }
    if (a.mate == i) note("involution has fixed point at arc " + std::to_string(i));
    const Arc& b = net.arcs[a.mate];
    if (b.mate != i)
      note("arc mate map is not an involution at arc " + std::to_string(i));
    if (b.tail != SkewSymmetricNetwork::node_mate(a.head) ||
        b.head != SkewSymmetricNetwork::node_mate(a.tail))
      note("mate of arc " + std::to_string(i) +
           " does not have swapped-and-mated endpoints");
    if (b.cap != a.cap)
      note("asymmetric capacity on pair (" + std::to_string(i) + "," +
           std::to_string(a.mate) + ")");
  }
  return bad;
}

SplitGraph build_split_graph(const SkewSymmetricNetwork& g,
                             const std::vector<Cap>& h) {
  const int m = g.arc_count();
  if (static_cast<int>(h.size()) != m)
    throw std::invalid_argument("capacity vector size mismatch");
  for (int i = 0; i < m; ++i) {
    if (h[i] < 0) throw std::invalid_argument("negative capacity");
    if (h[i] != h[g.arcs[i].mate])
      throw std::invalid_argument("asymmetric capacity on arc " +
                                  std::to_string(i));
  }
  SplitGraph out;
  out.g.node_count = g.node_count;
  std::vector<int> first_id(m, -1), second_id(m, -1);
  for (int i = 0; i < m; ++i) {
    if (h[i] >= 1) {
      first_id[i] = out.g.arc_count();
      out.g.arcs.push_back({g.arcs[i].tail, g.arcs[i].head, (h[i] + 1) / 2, -1});
      out.omega.push_back(i);
      out.is_second.push_back(0);
    }
    if (h[i] >= 2) {
      second_id[i] = out.g.arc_count();
      out.g.arcs.push_back({g.arcs[i].tail, g.arcs[i].head, h[i] / 2, -1});
      out.omega.push_back(i);
      out.is_second.push_back(1);
    }
  }
  for (int i = 0; i < m; ++i) {
    int j = g.arcs[i].mate;
    if (first_id[i] >= 0) out.g.arcs[first_id[i]].mate = first_id[j];
    if (second_id[i] >= 0) out.g.arcs[second_id[i]].mate = second_id[j];
  }
  return out;
}

std::vector<int> lift_regular_path(const SplitGraph& split,
                                   const SkewSymmetricNetwork& g,
                                   const std::vector<Cap>& h,
                                   const std::vector<int>& path) {
  // first/second split-arc ids per original arc
  const int m = g.arc_count();
  std::vector<int> first_id(m, -1), second_id(m, -1);
  for (int i = 0; i < split.g.arc_count(); ++i) {
    (split.is_second[i] ? second_id : first_id)[split.omega[i]] = i;
  }
  std::vector<char> on_path(m, 0);
  for (int a : path) {
    if (a < 0 || a >= m) throw std::invalid_argument("arc id out of range");
    if (on_path[a]) throw std::invalid_argument("arc repeated on path");
    on_path[a] = 1;
  }
  std::vector<char> mate_seen(m, 0);
  std::vector<int> out;
  out.reserve(path.size());
  for (int a : path) {
    int am = g.arcs[a].mate;
    if (h[a] < 1)
      throw std::invalid_argument("not h-regular at arc " + std::to_string(a));
    if (on_path[am]) {
      if (h[a] < 2)
        throw std::invalid_argument("not h-regular at arc " + std::to_string(a));
      // earlier occurrence of a mate pair takes the first copy, later the second
      out.push_back(mate_seen[am] ? second_id[a] : first_id[a]);
      mate_seen[a] = 1;
    } else {
      out.push_back(first_id[a]);
    }
  }
  return out;
}

ResidualNetwork residual(const SkewSymmetricNetwork& net, const ISFlow& f) {
  const int m = net.arc_count();
  if (static_cast<int>(f.on_arc.size()) != m)
    throw std::invalid_argument("flow vector size mismatch");
  for (int i = 0; i < m; ++i) {
    if (f.on_arc[i] < 0 || f.on_arc[i] > net.arcs[i].cap)
      throw std::invalid_argument("flow out of bounds on arc " +
                                  std::to_string(i));
    if (f.on_arc[i] != f.on_arc[net.arcs[i].mate])
      throw std::invalid_argument("asymmetric flow on arc " + std::to_string(i));
  }
  ResidualNetwork out;
  out.orig_arc_count = m;
  out.g.node_count = net.node_count;
  out.g.arcs.reserve(2 * m);
  for (int i = 0; i < m; ++i) {
    const Arc& a = net.arcs[i];
    out.g.arcs.push_back({a.tail, a.head, a.cap - f.on_arc[i], a.mate});
  }
  for (int i = 0; i < m; ++i) {
    const Arc& a = net.arcs[i];
    out.g.arcs.push_back({a.head, a.tail, f.on_arc[i], a.mate + m});
  }
  return out;
}

ISFlow zero_flow(const SkewSymmetricNetwork& net) {
  ISFlow f;
  f.on_arc.assign(net.arc_count(), 0);
  f.value = 0;
  return f;
}

static Cap divergence(const SkewSymmetricNetwork& net,
                      const std::vector<Cap>& vals, int v) {
  Cap d = 0;
  for (int i = 0; i < net.arc_count(); ++i) {
    if (net.arcs[i].tail == v) d += vals[i];
    if (net.arcs[i].head == v) d -= vals[i];
  }
  return d;
}

ISFlow superpose(const SkewSymmetricNetwork& net, const ISFlow& f,
                 const std::vector<Cap>& g) {
  const int m = net.arc_count();
  if (static_cast<int>(g.size()) != 2 * m)
    throw std::invalid_argument("residual flow vector size mismatch");
  ISFlow out;
  out.on_arc.resize(m);
  for (int i = 0; i < m; ++i) {
    out.on_arc[i] = f.on_arc[i] + g[i] - g[i + m];
    if (out.on_arc[i] < 0 || out.on_arc[i] > net.arcs[i].cap)
      throw std::invalid_argument("superposition infeasible on arc " +
                                  std::to_string(i));
  }
  out.value = divergence(net, out.on_arc, net.source());
  return out;
}

Cap path_capacity(const SkewSymmetricNetwork& g, const std::vector<Cap>& h,
                  const std::vector<int>& path) {
  std::vector<char> on_path(g.arc_count(), 0);
  for (int a : path) on_path[a] = 1;
  Cap d = -1;
  for (int a : path) {
    Cap c = on_path[g.arcs[a].mate] ? h[a] / 2 : h[a];
    d = d < 0 ? c : std::min(d, c);
  }
  return d < 0 ? 0 : d;
}

bool is_regular_path(const SkewSymmetricNetwork& g, const std::vector<int>& path,
                     int from, int to) {
  if (path.empty()) return from == to;
  std::vector<char> used(g.arc_count(), 0);
  int at = from;
  for (int a : path) {
    if (a < 0 || a >= g.arc_count()) return false;
    if (g.arcs[a].tail != at) return false;
    if (used[a] || used[g.arcs[a].mate]) return false;
    used[a] = 1;
    at = g.arcs[a].head;
  }
  return at == to;
}

}  // namespace ssf
