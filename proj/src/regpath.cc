#include "ssf/regpath.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace ssf {

namespace {

constexpr int kNoTime = std::numeric_limits<int>::max();

// Worklist-driven search for a regular s->s' path with eager fragment
// contraction.  The graph is mutated in place: arc ids never change, but
// current endpoints do.  `active` selects the arcs visible to the search
// (all positive-capacity arcs for plain reachability, the zero
// reduced-length arcs for the shortest-path run).
struct Engine {
  const SkewSymmetricNetwork* g = nullptr;
  int n = 0, m = 0;
  std::vector<char> present;  // positive capacity
  std::vector<char> active;
  std::vector<char> dead;  // removed by trimming (internal to a fragment)
  std::vector<int> dead_time;  // fragment index whose trimming removed it
  std::vector<int> cur_tail, cur_head;
  std::vector<std::vector<int>> out_arcs, in_arcs;
  std::vector<char> in_tree;
  std::vector<int> parent_arc;
  std::vector<int> mark;
  int mark_gen = 0;
  std::vector<int> work;
  std::vector<TrimmedZeroGraph::Frag> frags;
  std::vector<std::vector<std::pair<int, int>>> tail_events, head_events;
  std::vector<int> dsu;
  std::vector<char> is_rep;
  std::vector<int> max_frag_at;
  bool found = false;
  std::vector<int> found_cur_path;  // arcs of the current (trimmed) graph

  Engine(const SkewSymmetricNetwork& net, bool all_active) : g(&net) {
    n = net.node_count;
    m = net.arc_count();
    present.resize(m);
    active.resize(m);
    dead.assign(m, 0);
    dead_time.assign(m, -1);
    cur_tail.resize(m);
    cur_head.resize(m);
    out_arcs.resize(n);
    in_arcs.resize(n);
    in_tree.assign(n, 0);
    parent_arc.assign(n, -1);
    mark.assign(n, 0);
    tail_events.resize(m);
    head_events.resize(m);
    dsu.resize(n);
    for (int v = 0; v < n; ++v) dsu[v] = v;
    is_rep.assign(n, 0);
    max_frag_at.assign(n, -1);
    for (int a = 0; a < m; ++a) {
      present[a] = net.arcs[a].cap > 0;
      active[a] = all_active && present[a];
      cur_tail[a] = net.arcs[a].tail;
      cur_head[a] = net.arcs[a].head;
      if (present[a]) {
        out_arcs[cur_tail[a]].push_back(a);
        in_arcs[cur_head[a]].push_back(a);
      }
    }
    in_tree[0] = 1;
    push_out(0);
  }

  int find(int v) {
    while (dsu[v] != v) {
      dsu[v] = dsu[dsu[v]];
      v = dsu[v];
    }
    return v;
  }

  int tree_parent(int v) const {
    return v == 0 ? -1 : cur_tail[parent_arc[v]];
  }

  void push_out(int v) {
    for (int a : out_arcs[v]) work.push_back(a);
  }

  void run() {
    while (!work.empty() && !found) {
      int a = work.back();
      work.pop_back();
      process(a);
    }
  }

  void process(int a) {
    if (dead[a] || !active[a]) return;
    int x = cur_tail[a];
    if (!in_tree[x]) return;
    int y = cur_head[a];
    if (y == x || in_tree[y]) return;
    int ys = SkewSymmetricNetwork::node_mate(y);
    if (in_tree[ys]) {
      bridge(a, x, ys);
      return;
    }
    in_tree[y] = 1;
    parent_arc[y] = a;
    push_out(y);
  }

  // (arc, node) steps from just below `stop` down to `from`.
  std::vector<std::pair<int, int>> climb(int from, int stop) {
    std::vector<std::pair<int, int>> steps;
    for (int v = from; v != stop; v = tree_parent(v))
      steps.push_back({parent_arc[v], v});
    std::reverse(steps.begin(), steps.end());
    return steps;
  }

  void bridge(int a, int x, int ys) {
    ++mark_gen;
    for (int v = x; v != -1; v = tree_parent(v)) mark[v] = mark_gen;
    int d = ys;
    while (mark[d] != mark_gen) d = tree_parent(d);
    auto bx = climb(x, d);
    auto by = climb(ys, d);
    if (d == 0) {
      for (auto& st : bx) found_cur_path.push_back(st.first);
      found_cur_path.push_back(a);
      for (auto it = by.rbegin(); it != by.rend(); ++it)
        found_cur_path.push_back(g->arcs[it->first].mate);
      found = true;
      return;
    }
    contract(d, std::move(bx), std::move(by), a);
  }

  void contract(int d, std::vector<std::pair<int, int>> bx,
                std::vector<std::pair<int, int>> by, int bridge_arc) {
    int t = static_cast<int>(frags.size());
    TrimmedZeroGraph::Frag f;
    f.base = parent_arc[d];
    f.rep = d;
    f.bridge = bridge_arc;
    if (is_rep[d]) f.children.push_back(max_frag_at[d]);
    int dp = SkewSymmetricNetwork::node_mate(d);
    std::vector<int> interior;  // removed nodes; dp goes first (see below)
    interior.push_back(dp);
    auto add_pair = [&](int v) {
      interior.push_back(v);
      interior.push_back(SkewSymmetricNetwork::node_mate(v));
      if (is_rep[v])
        f.children.push_back(max_frag_at[v]);
      else
        f.fresh_pairs.push_back(v);
    };
    for (auto& st : bx) add_pair(st.second);
    for (auto& st : by) add_pair(st.second);
    f.branch_x = std::move(bx);
    f.branch_y = std::move(by);
    ++mark_gen;
    for (int w : interior) mark[w] = mark_gen;
    int antibase = g->arcs[f.base].mate;
    // dp is processed first so that arcs re-headed onto dp by later
    // iterations are appended after its own list has been scanned.
    for (int w : interior) {
      in_tree[w] = 0;
      int rw = find(w);
      if (rw != d) dsu[rw] = d;
      for (int b : out_arcs[w]) {
        if (dead[b] || cur_tail[b] != w) continue;
        if (b == antibase) continue;  // anti-base keeps its tail
        int h = cur_head[b];
        if (mark[h] == mark_gen || h == d) {
          dead[b] = 1;
          dead_time[b] = t;
          continue;
        }
        tail_events[b].push_back({t, w});
        cur_tail[b] = d;
        out_arcs[d].push_back(b);
        work.push_back(b);
      }
      out_arcs[w].clear();
      for (int b : in_arcs[w]) {
        if (dead[b] || cur_head[b] != w) continue;
        int tl = cur_tail[b];
        if (mark[tl] == mark_gen || tl == d) {
          dead[b] = 1;
          dead_time[b] = t;
          continue;
        }
        if (w == dp) continue;  // already points at the kept mate node
        head_events[b].push_back({t, w});
        cur_head[b] = dp;
        in_arcs[dp].push_back(b);
        work.push_back(b);
      }
      if (w != dp) in_arcs[w].clear();
    }
    // Arcs entering the fragment at the kept node d itself (other than the
    // base arc) must also be re-headed onto the kept mate node: entry is
    // only possible through the base.
    {
      size_t sz = in_arcs[d].size();  // re-heads append to in_arcs[dp]
      for (size_t i = 0; i < sz; ++i) {
        int b = in_arcs[d][i];
        if (dead[b] || cur_head[b] != d || b == f.base) continue;
        int tl = cur_tail[b];
        if (mark[tl] == mark_gen) {
          dead[b] = 1;
          dead_time[b] = t;
          continue;
        }
        head_events[b].push_back({t, d});
        cur_head[b] = dp;
        in_arcs[dp].push_back(b);
        work.push_back(b);
      }
      std::vector<int> kept;
      kept.push_back(f.base);
      in_arcs[d] = std::move(kept);
    }
    is_rep[d] = 1;
    max_frag_at[d] = t;
    frags.push_back(std::move(f));
  }

  // -1: not inside any fragment; otherwise the maximal fragment index.
  int fragment_of(int v) {
    int r = find(v);
    if (r != v) return max_frag_at[r];
    return is_rep[v] ? max_frag_at[v] : -1;
  }

  // 0 = A (reached, outside fragments), 1 = A', 2 = fragment, 3 = rest.
  int node_class(int v) {
    if (fragment_of(v) != -1) return 2;
    if (in_tree[v]) return 0;
    int vm = SkewSymmetricNetwork::node_mate(v);
    if (fragment_of(vm) == -1 && in_tree[vm]) return 1;
    return 3;
  }

  std::vector<int> maximal_fragments() {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(frags.size()); ++i) {
      int r = frags[i].rep;
      if (find(r) == r && max_frag_at[r] == i) out.push_back(i);
    }
    return out;
  }

  // On exhaustion: A = reached nodes outside fragments; each X is the
  // union of maximal fragments chained through base arcs whose original
  // tails lie inside another fragment; the entry arc is the chain root's
  // base arc.
  SBarrier build_barrier() {
    SBarrier b;
    for (int v = 0; v < n; ++v)
      if (node_class(v) == 0) b.A.push_back(v);
    auto maximal = maximal_fragments();
    int k = static_cast<int>(maximal.size());
    std::vector<int> pos(frags.size(), -1);
    for (int i = 0; i < k; ++i) pos[maximal[i]] = i;
    std::vector<int> grp(k);
    for (int i = 0; i < k; ++i) grp[i] = i;
    std::function<int(int)> groot = [&](int i) {
      while (grp[i] != i) {
        grp[i] = grp[grp[i]];
        i = grp[i];
      }
      return i;
    };
    for (int i = 0; i < k; ++i) {
      int base = frags[maximal[i]].base;
      int pf = fragment_of(g->arcs[base].tail);
      if (pf != -1) {
        int j = pos[pf];
        int ri = groot(i), rj = groot(j);
        if (ri != rj) grp[ri] = rj;
      }
    }
    std::vector<int> group_index(k, -1);
    for (int i = 0; i < k; ++i) {
      int base = frags[maximal[i]].base;
      if (fragment_of(g->arcs[base].tail) == -1) {
        int r = groot(i);
        if (group_index[r] != -1)
          throw std::logic_error("fragment chain with two roots");
        group_index[r] = static_cast<int>(b.X.size());
        b.X.emplace_back();
        b.entry_arcs.push_back(base);
      }
    }
    for (int i = 0; i < k; ++i)
      if (group_index[groot(i)] == -1)
        throw std::logic_error("fragment chain without a root");
    for (int v = 0; v < n; ++v) {
      int fv = fragment_of(v);
      if (fv != -1) b.X[group_index[groot(pos[fv])]].push_back(v);
    }
    return b;
  }

  TrimmedZeroGraph take_tz(std::vector<char> zero) {
    TrimmedZeroGraph tz;
    tz.node_count = n;
    tz.arc_count = m;
    tz.present = present;
    tz.zero = std::move(zero);
    tz.alive.resize(m);
    tz.arc_mate.resize(m);
    for (int a = 0; a < m; ++a) {
      tz.alive[a] = present[a] && !dead[a];
      tz.arc_mate[a] = g->arcs[a].mate;
    }
    tz.cur_tail = cur_tail;
    tz.cur_head = cur_head;
    tz.live_node.resize(n);
    tz.node_fragment.resize(n);
    for (int v = 0; v < n; ++v) {
      int r = find(v);
      int vm = SkewSymmetricNetwork::node_mate(v);
      tz.live_node[v] = (r == v) || (r == vm && is_rep[vm]);
      tz.node_fragment[v] = fragment_of(v);
    }
    tz.maximal = maximal_fragments();
    tz.frags = frags;
    tz.tail_events = tail_events;
    tz.head_events = head_events;
    return tz;
  }

  // Undoes every contraction from fragment index t0 onward.  Used by the
  // shortest-path run: fragments contracted after the last positive dual
  // step carry no weight, so dissolving them keeps reduced lengths intact
  // while restoring the property that the base arc of each surviving
  // maximal fragment has unit capacity (which the phase reduction needs).
  void dissolve_from(int t0) {
    if (t0 >= static_cast<int>(frags.size())) return;
    for (int a = 0; a < m; ++a) {
      while (!tail_events[a].empty() && tail_events[a].back().first >= t0) {
        cur_tail[a] = tail_events[a].back().second;
        tail_events[a].pop_back();
      }
      while (!head_events[a].empty() && head_events[a].back().first >= t0) {
        cur_head[a] = head_events[a].back().second;
        head_events[a].pop_back();
      }
      if (dead_time[a] >= t0) {
        dead[a] = 0;
        dead_time[a] = -1;
      }
    }
    frags.resize(t0);
    for (int v = 0; v < n; ++v) dsu[v] = v;
    is_rep.assign(n, 0);
    max_frag_at.assign(n, -1);
    for (int t = 0; t < t0; ++t) {
      const auto& f = frags[t];
      auto absorb = [&](int w) {
        int rw = find(w);
        if (rw != f.rep) dsu[rw] = f.rep;
      };
      absorb(SkewSymmetricNetwork::node_mate(f.rep));
      for (const auto& st : f.branch_x) {
        absorb(st.second);
        absorb(SkewSymmetricNetwork::node_mate(st.second));
      }
      for (const auto& st : f.branch_y) {
        absorb(st.second);
        absorb(SkewSymmetricNetwork::node_mate(st.second));
      }
      is_rep[f.rep] = 1;
      max_frag_at[f.rep] = t;
    }
  }
};

// Arcs of the connector path from f.rep to `target` inside the fragment,
// expressed in the graph current at the fragment's contraction.  Routes:
// along a branch for branch nodes; across the bridge and backwards along
// the mate of the other branch for mates of branch nodes.
std::vector<int> conn_arcs(const TrimmedZeroGraph& tz,
                           const TrimmedZeroGraph::Frag& f, int target) {
  if (target == f.rep) return {};
  std::vector<int> out;
  auto prefix = [&](const std::vector<std::pair<int, int>>& br) -> bool {
    for (size_t i = 0; i < br.size(); ++i) {
      out.push_back(br[i].first);
      if (br[i].second == target) return true;
    }
    out.clear();
    return false;
  };
  if (prefix(f.branch_x) || prefix(f.branch_y)) return out;
  int tm = SkewSymmetricNetwork::node_mate(target);
  auto across = [&](const std::vector<std::pair<int, int>>& fwd, int bridge,
                    const std::vector<std::pair<int, int>>& back,
                    int back_root) -> bool {
    // mate of back_root or of a node of `back` wanted: full fwd branch,
    // the bridge, then mates of `back` arcs from the top downwards.
    int stop = -1;
    if (tm == back_root) {
      stop = 0;
    } else {
      for (size_t i = 0; i < back.size(); ++i)
        if (back[i].second == tm) stop = static_cast<int>(i) + 1;
    }
    if (stop < 0) return false;
    for (auto& st : fwd) out.push_back(st.first);
    out.push_back(bridge);
    for (int i = static_cast<int>(back.size()); i > stop; --i)
      out.push_back(tz.arc_mate[back[i - 1].first]);
    return true;
  };
  // target is the mate of a branch-y node (or of rep): go out along x.
  if (across(f.branch_x, f.bridge, f.branch_y, f.rep)) return out;
  out.clear();
  // target is the mate of a branch-x node: go out along y, cross the
  // mate of the bridge.
  if (across(f.branch_y, tz.arc_mate[f.bridge], f.branch_x, -2)) return out;
  throw std::logic_error("connector target not inside fragment");
}

const std::pair<int, int>* latest_event(
    const std::vector<std::pair<int, int>>& ev, int limit) {
  for (auto it = ev.rbegin(); it != ev.rend(); ++it)
    if (it->first < limit) return &*it;
  return nullptr;
}

void expand_junction(const TrimmedZeroGraph& tz, int prev, int next, int limit,
                     std::vector<int>& out);

void expand_chain(const TrimmedZeroGraph& tz, int prev,
                  const std::vector<int>& mid, int next, int limit,
                  std::vector<int>& out) {
  int last = prev;
  for (int a : mid) {
    expand_junction(tz, last, a, limit, out);
    out.push_back(a);
    last = a;
  }
  expand_junction(tz, last, next, limit, out);
}

// Emits the original arcs needed between `prev` and `next`, which meet at
// one node of the graph as of time `limit` but may be separated by
// fragment interiors in the original graph.
void expand_junction(const TrimmedZeroGraph& tz, int prev, int next, int limit,
                     std::vector<int>& out) {
  if (tz.head_at(prev, 0) == tz.tail_at(next, 0)) return;
  const auto* tev = latest_event(tz.tail_events[next], limit);
  const auto* hev = latest_event(tz.head_events[prev], limit);
  if (tev && hev)
    throw std::logic_error("ambiguous junction expansion");
  if (tev) {
    const auto& f = tz.frags[tev->first];
    auto mid = conn_arcs(tz, f, tev->second);
    expand_chain(tz, prev, mid, next, tev->first, out);
  } else if (hev) {
    const auto& f = tz.frags[hev->first];
    auto mid =
        conn_arcs(tz, f, SkewSymmetricNetwork::node_mate(hev->second));
    std::reverse(mid.begin(), mid.end());
    for (int& a : mid) a = tz.arc_mate[a];
    expand_chain(tz, prev, mid, next, hev->first, out);
  } else {
    throw std::logic_error("junction cannot be expanded");
  }
}

}  // namespace

int TrimmedZeroGraph::tail_at(int a, int time) const {
  for (auto& ev : tail_events[a])
    if (ev.first >= time) return ev.second;
  return cur_tail[a];
}

int TrimmedZeroGraph::head_at(int a, int time) const {
  for (auto& ev : head_events[a])
    if (ev.first >= time) return ev.second;
  return cur_head[a];
}

std::vector<int> TrimmedZeroGraph::trimmed_arcs() const {
  std::vector<int> out;
  for (int a = 0; a < arc_count; ++a)
    if (present[a] && zero[a] && alive[a]) out.push_back(a);
  return out;
}

std::vector<int> TrimmedZeroGraph::connector(int frag_index,
                                             int exit_arc) const {
  const Frag& f = frags[frag_index];
  if (cur_tail[exit_arc] != f.rep)
    throw std::invalid_argument("exit arc does not leave the fragment");
  std::vector<int> out;
  expand_junction(*this, f.base, exit_arc, kNoTime, out);
  return out;
}

std::vector<int> TrimmedZeroGraph::fragment_nodes(int frag_index) const {
  std::vector<int> out;
  std::vector<int> stack = {frag_index};
  while (!stack.empty()) {
    const Frag& f = frags[stack.back()];
    stack.pop_back();
    out.push_back(f.rep);
    out.push_back(SkewSymmetricNetwork::node_mate(f.rep));
    for (int v : f.fresh_pairs) {
      out.push_back(v);
      out.push_back(SkewSymmetricNetwork::node_mate(v));
    }
    for (int c : f.children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> restore_path(const TrimmedZeroGraph& tz,
                              const std::vector<int>& trimmed_path) {
  if (trimmed_path.empty()) return {};
  std::set<int> used;
  for (size_t i = 0; i < trimmed_path.size(); ++i) {
    int a = trimmed_path[i];
    if (a < 0 || a >= tz.arc_count || !tz.present[a] || !tz.alive[a])
      throw std::invalid_argument("trimmed path uses a missing arc");
    if (used.count(a) || used.count(tz.arc_mate[a]))
      throw std::invalid_argument("trimmed path is not regular");
    used.insert(a);
    if (i > 0 && tz.cur_head[trimmed_path[i - 1]] != tz.cur_tail[a])
      throw std::invalid_argument("trimmed path is not connected");
  }
  std::vector<int> out;
  out.push_back(trimmed_path[0]);
  for (size_t i = 1; i < trimmed_path.size(); ++i) {
    expand_junction(tz, trimmed_path[i - 1], trimmed_path[i], kNoTime, out);
    out.push_back(trimmed_path[i]);
  }
  return out;
}

RegPathResult find_regular_path(const SkewSymmetricNetwork& g) {
  Engine e(g, /*all_active=*/true);
  e.run();
  RegPathResult res;
  if (e.found) {
    auto cur_path = e.found_cur_path;
    TrimmedZeroGraph tz = e.take_tz(e.present);
    auto p = restore_path(tz, cur_path);
    if (!is_regular_path(g, p, 0, 1))
      throw std::logic_error("restored path failed the regularity check");
    res.path = std::move(p);
    return res;
  }
  SBarrier b = e.build_barrier();
  if (auto err = verify_barrier(g, b))
    throw std::logic_error("barrier verification failed: " + *err);
  res.barrier = std::move(b);
  return res;
}

std::variant<SraResult, SBarrier> shortest_unit_sra(
    const SkewSymmetricNetwork& g) {
  Engine e(g, /*all_active=*/false);
  int m = e.m;
  // Lengths are kept doubled (each arc counts 2) so that the dual steps,
  // which are half-integral in the original unit, stay integral.
  std::vector<long long> lr(m, 2);
  int weighted_upto = 0;  // fragments below this index have positive weight
  int doublings = 0;
  long long guard = 8LL * (e.n + 4) + 64;
  for (long long iter = 0;; ++iter) {
    e.run();
    if (e.found) break;
    if (iter > guard) throw std::logic_error("dual update bound exceeded");
    // Per-node potential step: -1 on reached nodes, +1 on their mates.
    // Fragment variables of all maximal fragments grow by the same step;
    // the per-arc coefficient below folds both together.
    std::vector<int> cls(e.n);
    for (int v = 0; v < e.n; ++v) cls[v] = e.node_class(v);
    auto coef = [&](int a) {
      int x = g.arcs[a].tail, y = g.arcs[a].head;
      int c = 0;
      if (cls[x] == 0) c -= 1;
      if (cls[x] == 1) c += 1;
      if (cls[y] == 0) c += 1;
      if (cls[y] == 1) c -= 1;
      int fx = e.fragment_of(x), fy = e.fragment_of(y);
      if (fx != fy) {
        if (fx != -1)
          c += (a == e.frags[fx].base || a == g.arcs[e.frags[fx].base].mate)
                   ? 1
                   : -1;
        if (fy != -1)
          c += (a == e.frags[fy].base || a == g.arcs[e.frags[fy].base].mate)
                   ? 1
                   : -1;
      }
      return c;
    };
    long long eps = -1;
    for (int a = 0; a < m; ++a) {
      if (!e.present[a]) continue;
      int c = coef(a);
      if (c >= 0) continue;
      if (lr[a] <= 0)
        throw std::logic_error("zero-length arc in a shrinking class");
      long long cand = lr[a] / (-c);
      if (eps < 0 || cand < eps) eps = cand;
    }
    if (eps < 0) {
      // Nothing left to relax: the current barrier is valid in the full
      // graph, not just in the zero-length subgraph.
      SBarrier b = e.build_barrier();
      if (auto err = verify_barrier(g, b))
        throw std::logic_error("barrier verification failed: " + *err);
      return b;
    }
    if (eps == 0) {
      if (++doublings > 62) throw std::logic_error("dual scaling overflow");
      for (int a = 0; a < m; ++a) lr[a] *= 2;
      continue;
    }
    for (int a = 0; a < m; ++a) {
      if (!e.present[a]) continue;
      lr[a] += eps * coef(a);
      if (lr[a] == 0 && !e.active[a]) {
        e.active[a] = 1;
        e.work.push_back(a);
      } else if (lr[a] > 0 && e.active[a]) {
        e.active[a] = 0;
      }
    }
    weighted_upto = static_cast<int>(e.frags.size());
  }
  auto cur_path = e.found_cur_path;
  std::vector<char> zero(m, 0);
  for (int a = 0; a < m; ++a) zero[a] = e.present[a] && lr[a] == 0;
  SraResult res;
  {
    TrimmedZeroGraph full = e.take_tz(zero);
    res.shortest_path = restore_path(full, cur_path);
  }
  e.dissolve_from(weighted_upto);
  res.tz = e.take_tz(std::move(zero));
  if (!is_regular_path(g, res.shortest_path, 0, 1))
    throw std::logic_error("restored path failed the regularity check");
  res.rdist = static_cast<int>(res.shortest_path.size());
  return res;
}

std::optional<std::string> verify_barrier(const SkewSymmetricNetwork& g,
                                          const SBarrier& b) {
  int n = g.node_count;
  std::vector<int> label(n, -1);  // 0 = A, 1.. = X_i + 1
  for (int v : b.A) {
    if (v < 0 || v >= n) return "B1: node out of range";
    if (label[v] != -1) return "B1: sets are not disjoint";
    label[v] = 0;
  }
  for (size_t i = 0; i < b.X.size(); ++i)
    for (int v : b.X[i]) {
      if (v < 0 || v >= n) return "B1: node out of range";
      if (label[v] != -1) return "B1: sets are not disjoint";
      label[v] = static_cast<int>(i) + 1;
    }
  if (label[0] != 0) return "B1: source not in A";
  for (int v : b.A)
    if (label[SkewSymmetricNetwork::node_mate(v)] == 0)
      return "B2: A meets its own mate set";
  for (size_t i = 0; i < b.X.size(); ++i)
    for (int v : b.X[i])
      if (label[SkewSymmetricNetwork::node_mate(v)] !=
          static_cast<int>(i) + 1)
        return "B3: X set not self-symmetric";
  // classes: 0 A, 1 A', 2.. X_i + 2, -1 rest
  std::vector<int> cls(n, -1);
  for (int v = 0; v < n; ++v) {
    if (label[v] == 0)
      cls[v] = 0;
    else if (label[v] > 0)
      cls[v] = label[v] + 1;
  }
  for (int v : b.A) cls[SkewSymmetricNetwork::node_mate(v)] = 1;
  std::vector<int> entry_count(b.X.size(), 0);
  std::vector<int> entry_seen(b.X.size(), -1);
  for (int a = 0; a < g.arc_count(); ++a) {
    if (g.arcs[a].cap <= 0) continue;
    int cx = cls[g.arcs[a].tail], cy = cls[g.arcs[a].head];
    if (cx >= 2 && cy >= 2 && cx != cy) return "B5: arc between two X sets";
    if ((cx >= 2 && cy == -1) || (cx == -1 && cy >= 2))
      return "B6: arc between an X set and the remainder";
    if (cx == 0 && (cy == 1 || cy == -1))
      return "B7: arc from A to its mate set or the remainder";
    if (cx == 0 && cy >= 2) {
      ++entry_count[cy - 2];
      entry_seen[cy - 2] = a;
    }
  }
  for (size_t i = 0; i < b.X.size(); ++i) {
    if (entry_count[i] != 1) return "B4: entry arc into an X set not unique";
    if (!b.entry_arcs.empty() &&
        (i >= b.entry_arcs.size() || b.entry_arcs[i] != entry_seen[i]))
      return "B4: recorded entry arc does not match";
  }
  return std::nullopt;
}

SkewSymmetricNetwork trim_fragment(const SkewSymmetricNetwork& g,
                                   const Fragment& phi) {
  int n = g.node_count;
  std::vector<char> in(n, 0);
  for (int v : phi.nodes) {
    if (v < 0 || v >= n) throw std::invalid_argument("fragment node range");
    in[v] = 1;
  }
  for (int v : phi.nodes)
    if (!in[SkewSymmetricNetwork::node_mate(v)])
      throw std::invalid_argument("fragment set not self-symmetric");
  if (in[0]) throw std::invalid_argument("fragment contains the source");
  if (phi.base_arc < 0 || phi.base_arc >= g.arc_count())
    throw std::invalid_argument("base arc out of range");
  const Arc& base = g.arcs[phi.base_arc];
  if (in[base.tail] || !in[base.head])
    throw std::invalid_argument("base arc does not enter the fragment");
  int w = base.head;
  int wp = SkewSymmetricNetwork::node_mate(w);
  int antibase = base.mate;
  SkewSymmetricNetwork out = g;
  for (int a = 0; a < g.arc_count(); ++a) {
    if (a == phi.base_arc || a == antibase) continue;
    bool ti = in[g.arcs[a].tail], hi = in[g.arcs[a].head];
    if (ti && hi) {
      out.arcs[a].tail = w;
      out.arcs[a].head = wp;
      out.arcs[a].cap = 0;  // (T3) arcs are dropped
    } else if (ti) {
      out.arcs[a].tail = w;
    } else if (hi) {
      out.arcs[a].head = wp;
    }
  }
  return out;
}

}  // namespace ssf
