#include "ssf/blockphase.h"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace ssf {

namespace {

// Shared validation for both path-set solvers.
void validate_instance(const MBPInstance& inst, bool need_unit) {
  const int n = inst.node_count, m = inst.arc_count();
  if (n == 0) {
    if (m || !inst.source_pairs.empty())
      throw std::invalid_argument("arcs or sources without nodes");
    return;
  }
  if (inst.sink < 0 || inst.sink >= n)
    throw std::invalid_argument("sink out of range");
  if (static_cast<int>(inst.head.size()) != m)
    throw std::invalid_argument("tail/head size mismatch");
  if (!inst.cap.empty() && static_cast<int>(inst.cap.size()) != m)
    throw std::invalid_argument("capacity vector size mismatch");
  std::vector<char> is_src(n, 0);
  for (auto [z, zm] : inst.source_pairs) {
    if (z < 0 || z >= n || zm < 0 || zm >= n || z == zm)
      throw std::invalid_argument("bad source pair");
    if (z == inst.sink || zm == inst.sink)
      throw std::invalid_argument("sink cannot be a source");
    if (is_src[z] || is_src[zm])
      throw std::invalid_argument("source repeated across pairs");
    is_src[z] = is_src[zm] = 1;
  }
  std::vector<int> indeg(n, 0);
  for (int a = 0; a < m; ++a) {
    if (inst.tail[a] < 0 || inst.tail[a] >= n || inst.head[a] < 0 ||
        inst.head[a] >= n)
      throw std::invalid_argument("arc endpoint out of range");
    if (!inst.cap.empty()) {
      if (inst.cap[a] < 1)
        throw std::invalid_argument("nonpositive capacity on arc " +
                                    std::to_string(a));
      if (need_unit && inst.cap[a] != 1)
        throw std::invalid_argument("unit solver given capacity above one");
    }
    ++indeg[inst.head[a]];
  }
  for (auto [z, zm] : inst.source_pairs)
    if (indeg[z] || indeg[zm])
      throw std::invalid_argument("source with entering arcs");
  // acyclicity via Kahn
  {
    std::vector<int> deg(indeg);
    std::vector<std::vector<int>> out(n);
    for (int a = 0; a < m; ++a) out[inst.tail[a]].push_back(inst.head[a]);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++seen;
      for (int w : out[v])
        if (--deg[w] == 0) stack.push_back(w);
    }
    if (seen != n) throw std::invalid_argument("instance graph is cyclic");
  }
  // every node on a source-to-sink path
  {
    std::vector<char> from_z(n, 0), to_t(n, 0);
    std::vector<std::vector<int>> out(n), in(n);
    for (int a = 0; a < m; ++a) {
      out[inst.tail[a]].push_back(inst.head[a]);
      in[inst.head[a]].push_back(inst.tail[a]);
    }
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (is_src[v]) {
        from_z[v] = 1;
        stack.push_back(v);
      }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : out[v])
        if (!from_z[w]) {
          from_z[w] = 1;
          stack.push_back(w);
        }
    }
    to_t[inst.sink] = 1;
    stack.push_back(inst.sink);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : in[v])
        if (!to_t[w]) {
          to_t[w] = 1;
          stack.push_back(w);
        }
    }
    for (int v = 0; v < n; ++v)
      if (!from_z[v] || !to_t[v])
        throw std::invalid_argument("node " + std::to_string(v) +
                                    " lies on no source-to-sink path");
  }
}

// Transit depth-first search engine over the split graph.  Scan pointers
// persist across iterations in the unit case (every scanned arc is gone by
// the end of its iteration), giving near-linear total time; with general
// capacities the pointers of visited nodes are reset after a breakthrough.
struct Engine {
  const MBPInstance& inst;
  bool unit;
  int n, t;
  std::vector<Cap> c;  // residual per instance arc

  // split arcs
  std::vector<int> s_tail, s_head, s_gamma, s_mate;
  std::vector<char> s_alive, s_second;
  int sm = 0;

  // doubly-linked adjacency with per-node sentinels (id sm + x)
  std::vector<int> onext, oprev, inext, iprev;
  std::vector<int> cur_out;

  std::vector<int> dsu;

  std::vector<int> pair_mate;
  std::vector<char> src_active;
  int active_pairs = 0;

  // shrink history for path expansion
  struct Record {
    int root;
  };
  std::vector<Record> records;
  std::vector<int> member_of, step_arc, step_next;

  // current source-to-sink path, stored reversed: p_rev[0] enters the sink
  std::vector<int> p_rev;
  int p_epoch = 1;
  std::vector<int> ent_ep, out_ep, ent_idx, out_idx;

  int it = 1;
  std::vector<int> vis_ep, virt_ep;
  std::vector<int> vis_list, stack_;

  std::vector<int> clean_q;
  std::vector<std::vector<int>> radj, bucket;
  std::vector<int> tree_ep;
  int tree_it = 1;

  BalancedPathSet result;

  int osent(int x) const { return sm + x; }
  int isent(int x) const { return sm + x; }

  Engine(const MBPInstance& ii, bool uu) : inst(ii), unit(uu) {
    n = inst.node_count;
    t = inst.sink;
    c = inst.cap.empty() ? std::vector<Cap>(inst.arc_count(), 1) : inst.cap;
    for (int g = 0; g < inst.arc_count(); ++g) {
      add_split(g, 0);
      if (!unit && c[g] >= 2) add_split(g, 1);
    }
    for (int a = 0; a < sm; ++a)
      if (s_second[a]) {
        s_mate[a] = a - 1;
        s_mate[a - 1] = a;
      }
    onext.assign(sm + n, 0);
    oprev.assign(sm + n, 0);
    inext.assign(sm + n, 0);
    iprev.assign(sm + n, 0);
    for (int x = 0; x < n; ++x) {
      onext[osent(x)] = oprev[osent(x)] = osent(x);
      inext[isent(x)] = iprev[isent(x)] = isent(x);
    }
    for (int a = 0; a < sm; ++a) {
      link(onext, oprev, osent(s_tail[a]), a);
      link(inext, iprev, isent(s_head[a]), a);
    }
    cur_out.resize(n);
    for (int x = 0; x < n; ++x) cur_out[x] = onext[osent(x)];
    dsu.resize(n);
    for (int x = 0; x < n; ++x) dsu[x] = x;
    pair_mate.assign(n, -1);
    src_active.assign(n, 0);
    for (auto [z, zm] : inst.source_pairs) {
      pair_mate[z] = zm;
      pair_mate[zm] = z;
      src_active[z] = src_active[zm] = 1;
      ++active_pairs;
    }
    member_of.assign(n, -1);
    step_arc.assign(n, -1);
    step_next.assign(n, -1);
    ent_ep.assign(n, 0);
    out_ep.assign(n, 0);
    ent_idx.assign(n, 0);
    out_idx.assign(n, 0);
    vis_ep.assign(n, 0);
    virt_ep.assign(n, 0);
    radj.resize(n);
    bucket.resize(n);
    tree_ep.assign(n, 0);
  }

  void add_split(int g, bool second) {
    s_tail.push_back(inst.tail[g]);
    s_head.push_back(inst.head[g]);
    s_gamma.push_back(g);
    s_mate.push_back(-1);
    s_alive.push_back(1);
    s_second.push_back(second);
    ++sm;
  }

  static void link(std::vector<int>& nx, std::vector<int>& pv, int sent,
                   int a) {
    int last = pv[sent];
    nx[last] = a;
    pv[a] = last;
    nx[a] = sent;
    pv[sent] = a;
  }

  int find(int x) {
    while (dsu[x] != x) {
      dsu[x] = dsu[dsu[x]];
      x = dsu[x];
    }
    return x;
  }

  bool oempty(int x) const { return onext[osent(x)] == osent(x); }
  bool iempty(int x) const { return inext[isent(x)] == isent(x); }

  void del_arc(int a) {
    if (!s_alive[a]) return;
    s_alive[a] = 0;
    int x = s_tail[a];
    if (cur_out[x] == a) cur_out[x] = onext[a];
    onext[oprev[a]] = onext[a];
    oprev[onext[a]] = oprev[a];
    inext[iprev[a]] = inext[a];
    iprev[inext[a]] = iprev[a];
    clean_q.push_back(x);
    clean_q.push_back(find(s_head[a]));
  }

  void drop_pair(int z) {
    int zm = pair_mate[z];
    src_active[z] = src_active[zm] = 0;
    --active_pairs;
    clean_q.push_back(z);
    clean_q.push_back(zm);
  }

  // Iterated removal of nodes off all source-to-sink paths.
  void clean() {
    while (!clean_q.empty()) {
      int x = clean_q.back();
      clean_q.pop_back();
      if (x == t) continue;
      if (oempty(x)) {
        if (src_active[x]) drop_pair(x);
        while (inext[isent(x)] != isent(x)) del_arc(inext[isent(x)]);
      }
      if (iempty(x) && !src_active[x])
        while (onext[osent(x)] != osent(x)) del_arc(onext[osent(x)]);
    }
  }

  // Next arc of the reversed-path graph out of x: real arcs in list order
  // (the path arc leaving x is not part of that graph), then the reversed
  // path arc entering x, scanned last.
  static constexpr int kNone = INT_MIN;
  int advance(int x) {
    while (cur_out[x] != osent(x)) {
      int a = cur_out[x];
      cur_out[x] = onext[a];
      if (out_ep[x] == p_epoch &&
          out_idx[x] < static_cast<int>(p_rev.size()) &&
          p_rev[out_idx[x]] == a)
        continue;  // the path arc leaving x is reversed away
      return a;
    }
    if (ent_ep[x] == p_epoch && ent_idx[x] < static_cast<int>(p_rev.size()) &&
        virt_ep[x] != it) {
      virt_ep[x] = it;
      int k = ent_idx[x];
      if (!s_alive[p_rev[k]] || find(s_head[p_rev[k]]) != x)
        throw std::logic_error("stale path arc in reversal");
      return -(k + 1);
    }
    return kNone;
  }

  void visit(int x) {
    if (vis_ep[x] != it) {
      vis_ep[x] = it;
      vis_list.push_back(x);
    }
  }

  bool tdfs(int zp) {
    stack_.clear();
    vis_list.clear();
    int cur = zp;
    visit(zp);
    while (true) {
      if (cur == t) return true;
      int e = advance(cur);
      if (e == kNone) {
        if (stack_.empty()) {
          if (cur != zp) throw std::logic_error("search lost its start");
          return false;
        }
        int top = stack_.back();
        stack_.pop_back();
        cur = top >= 0 ? s_tail[top] : find(s_head[p_rev[-top - 1]]);
      } else if (e >= 0) {
        stack_.push_back(e);
        cur = find(s_head[e]);
        visit(cur);
      } else {
        stack_.push_back(e);
        cur = s_tail[p_rev[-e - 1]];
        visit(cur);
      }
    }
  }

  // Inserts the stored interior route between original node h and the
  // complex representative v it currently maps to.
  void expand_gap(int h, int v, std::vector<int>& arcs) {
    if (h == v) return;
    struct Item {
      int h, v;  // h == -1 means: emit arc id v
    };
    std::vector<Item> st{{h, v}};
    while (!st.empty()) {
      Item item = st.back();
      st.pop_back();
      if (item.h == -1) {
        arcs.push_back(item.v);
        continue;
      }
      if (item.h == item.v) continue;
      int r = member_of[item.h];
      if (r < 0) throw std::logic_error("path junction has no shrink record");
      int root = records[r].root;
      std::vector<Item> seq;
      int x = item.h;
      while (x != root) {
        int a = step_arc[x];
        seq.push_back({-1, a});
        seq.push_back({s_head[a], step_next[x]});
        x = step_next[x];
      }
      seq.push_back({root, item.v});
      for (auto itr = seq.rbegin(); itr != seq.rend(); ++itr)
        st.push_back(*itr);
    }
  }

  std::vector<int> expand(const std::vector<int>& raw, int start) {
    std::vector<int> sarcs;
    int at = start;
    for (int a : raw) {
      expand_gap(at, s_tail[a], sarcs);
      sarcs.push_back(a);
      at = s_head[a];
    }
    std::vector<int> res;
    res.reserve(sarcs.size());
    for (int a : sarcs) res.push_back(s_gamma[a]);
    return res;
  }

  void breakthrough(int z, int zp) {
    const int plen = static_cast<int>(p_rev.size());
    std::vector<char> reversed(plen, 0);
    std::vector<int> sset;
    for (int tok : stack_)
      if (tok < 0) reversed[-tok - 1] = 1;
    for (int k = 0; k < plen; ++k)
      if (!reversed[k]) sset.push_back(p_rev[k]);
    for (int tok : stack_)
      if (tok >= 0) sset.push_back(tok);

    std::vector<int> touched;
    for (int a : sset) {
      bucket[s_tail[a]].push_back(a);
      touched.push_back(s_tail[a]);
    }
    size_t used = 0;
    auto walk = [&](int x0) {
      std::vector<int> path;
      int x = x0;
      while (x != t) {
        auto& b = bucket[x];
        if (b.empty()) throw std::logic_error("path splice ran dry");
        int a = b.back();
        b.pop_back();
        ++used;
        path.push_back(a);
        x = find(s_head[a]);
      }
      return path;
    };
    std::vector<int> raw_q = walk(z), raw_r = walk(zp);
    if (used != sset.size())
      throw std::logic_error("path splice left arcs over");
    for (int x : touched) bucket[x].clear();

    Cap alpha = 1;
    if (!unit) {
      // usage of each instance arc by the pair: one or both split copies
      std::vector<int> uses;
      std::vector<int> gs;
      auto count = [&](const std::vector<int>& raw) {
        for (int a : raw) {
          int g = s_gamma[a];
          bool seen = false;
          for (size_t i = 0; i < gs.size(); ++i)
            if (gs[i] == g) {
              ++uses[i];
              seen = true;
            }
          if (!seen) {
            gs.push_back(g);
            uses.push_back(1);
          }
        }
      };
      count(raw_q);
      count(raw_r);
      alpha = -1;
      // the weight is capped by each used arc's capacity, halved when both
      // paths of the pair go through it (via its two split copies)
      for (size_t i = 0; i < gs.size(); ++i) {
        Cap b = uses[i] == 2 ? c[gs[i]] / 2 : c[gs[i]];
        if (alpha < 0 || b < alpha) alpha = b;
      }
      if (alpha < 1) throw std::logic_error("blocked pair carries nothing");
      for (size_t i = 0; i < gs.size(); ++i) c[gs[i]] -= uses[i] * alpha;
    }

    GoodPair gp;
    gp.z = z;
    gp.zm = zp;
    gp.alpha = alpha;
    gp.path_z = expand(raw_q, z);
    gp.path_zm = expand(raw_r, zp);
    result.pairs.push_back(std::move(gp));

    if (unit) {
      for (int a : sset) del_arc(a);
    } else {
      for (int a : sset) {
        int g = s_gamma[a];
        if (c[g] < 1) {
          del_arc(a);
          if (s_mate[a] >= 0) del_arc(s_mate[a]);
        } else if (c[g] < 2) {
          int e2 = s_second[a] ? a : s_mate[a];
          if (e2 >= 0) del_arc(e2);
        }
      }
    }
    clean();
    if (!unit)
      for (int x : vis_list) cur_out[x] = onext[osent(x)];
    p_rev.clear();
    ++p_epoch;
  }

  void shrink(int z, int zp) {
    (void)zp;
    // collect exit and internal arcs of the visited set
    int exit_arc = -1;
    std::vector<int> internal;
    for (int y : vis_list)
      for (int a = onext[osent(y)]; a != osent(y); a = onext[a]) {
        int r = find(s_head[a]);
        if (vis_ep[r] == it) {
          internal.push_back(a);
        } else {
          if (exit_arc != -1)
            throw std::logic_error("visited set has two exits");
          exit_arc = a;
        }
      }
    if (exit_arc < 0) throw std::logic_error("visited set has no exit");
    int v = s_tail[exit_arc];
    if (!(out_ep[v] == p_epoch && out_idx[v] < static_cast<int>(p_rev.size()) &&
          p_rev[out_idx[v]] == exit_arc))
      throw std::logic_error("exit arc is off the current path");
    if (!unit && (c[s_gamma[exit_arc]] != 1))
      throw std::logic_error("exit arc is not critical");

    // interior routes to the root, by representatives at this level
    ++tree_it;
    std::vector<int> rtouched;
    for (int a : internal) {
      int to = find(s_head[a]);
      radj[to].push_back(a);
      rtouched.push_back(to);
    }
    tree_ep[v] = tree_it;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a : radj[x]) {
        int f = s_tail[a];
        if (tree_ep[f] != tree_it) {
          tree_ep[f] = tree_it;
          step_arc[f] = a;
          step_next[f] = x;
          stack.push_back(f);
        }
      }
    }
    for (int x : rtouched) radj[x].clear();
    for (int y : vis_list)
      if (tree_ep[y] != tree_it)
        throw std::logic_error("shrunk node cannot reach the root");

    int rec = static_cast<int>(records.size());
    records.push_back({v});
    for (int y : vis_list)
      if (y != v) {
        member_of[y] = rec;
        dsu[y] = v;
      }
    for (int a : internal) del_arc(a);
    // merge surviving entering arcs onto the representative
    for (int y : vis_list) {
      if (y == v || iempty(y)) continue;
      int f = inext[isent(y)], l = iprev[isent(y)];
      int p = iprev[isent(v)];
      inext[p] = f;
      iprev[f] = p;
      inext[l] = isent(v);
      iprev[isent(v)] = l;
      inext[isent(y)] = iprev[isent(y)] = isent(y);
    }
    cur_out[v] = exit_arc;
    if (src_active[z]) drop_pair(z);
    // pre-path restarts at the complex node
    int keep = out_idx[v] + 1;
    while (static_cast<int>(p_rev.size()) > keep) p_rev.pop_back();
    clean();
  }

  BalancedPathSet run() {
    while (active_pairs > 0) {
      if (iempty(t)) break;
      while (!p_rev.empty() && !s_alive[p_rev.back()]) p_rev.pop_back();
      int front = p_rev.empty() ? t : s_tail[p_rev.back()];
      bool dead_end = false;
      while (!src_active[front]) {
        int e = inext[isent(front)];
        if (e == isent(front)) {
          dead_end = true;
          break;
        }
        int k = static_cast<int>(p_rev.size());
        p_rev.push_back(e);
        ent_ep[front] = p_epoch;
        ent_idx[front] = k;
        front = s_tail[e];
        out_ep[front] = p_epoch;
        out_idx[front] = k;
      }
      if (dead_end) {
        if (front == t) break;
        throw std::logic_error("path extension hit a dead inner node");
      }
      int z = front, zp = pair_mate[z];
      if (oempty(zp)) {
        drop_pair(z);
        clean();
        continue;
      }
      ++it;
      if (tdfs(zp))
        breakthrough(z, zp);
      else
        shrink(z, zp);
    }
    return std::move(result);
  }
};

}  // namespace

BalancedPathSet solve_mbp(const MBPInstance& inst) {
  validate_instance(inst, true);
  if (inst.node_count == 0) return {};
  Engine e(inst, true);
  return e.run();
}

BalancedPathSet solve_bbf(const MBPInstance& inst) {
  validate_instance(inst, false);
  if (inst.node_count == 0) return {};
  bool all_unit = true;
  for (Cap u : inst.cap) all_unit &= (u == 1);
  Engine e(inst, all_unit);  // unit capacities specialize exactly
  return e.run();
}

std::vector<Cap> path_set_flow(const MBPInstance& inst,
                               const BalancedPathSet& set) {
  std::vector<Cap> f(inst.arc_count(), 0);
  for (const GoodPair& gp : set.pairs) {
    for (int a : gp.path_z) f[a] += gp.alpha;
    for (int a : gp.path_zm) f[a] += gp.alpha;
  }
  return f;
}

MBPReduction to_mbp_instance(const SkewSymmetricNetwork& net) {
  const int n = net.node_count, m = net.arc_count();
  MBPReduction red;
  // nodes on a plain source-to-sink route over positive arcs
  std::vector<std::vector<int>> out(n), in(n);
  for (int a = 0; a < m; ++a)
    if (net.arcs[a].cap > 0) {
      out[net.arcs[a].tail].push_back(a);
      in[net.arcs[a].head].push_back(a);
    }
  auto reach = [&](int start, const std::vector<std::vector<int>>& adj,
                   bool fwd) {
    std::vector<char> r(n, 0);
    std::vector<int> stack{start};
    r[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a : adj[v]) {
        int w = fwd ? net.arcs[a].head : net.arcs[a].tail;
        if (!r[w]) {
          r[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return r;
  };
  auto from_s = reach(net.source(), out, true);
  auto to_t = reach(net.sink(), in, false);
  std::vector<char> keep(n, 0);
  for (int v = 0; v < n; ++v) keep[v] = from_s[v] && to_t[v];
  if (!keep[net.sink()]) return red;  // no route at all

  // topological positions on the kept subgraph; reject cycles
  std::vector<int> q(n, -1);
  {
    std::vector<int> deg(n, 0);
    int kept = 0;
    for (int v = 0; v < n; ++v)
      if (keep[v]) ++kept;
    for (int a = 0; a < m; ++a)
      if (net.arcs[a].cap > 0 && keep[net.arcs[a].tail] &&
          keep[net.arcs[a].head])
        ++deg[net.arcs[a].head];
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (keep[v] && deg[v] == 0) stack.push_back(v);
    int pos = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      q[v] = pos++;
      for (int a : out[v])
        if (keep[net.arcs[a].head] && --deg[net.arcs[a].head] == 0)
          stack.push_back(net.arcs[a].head);
    }
    if (pos != kept) throw std::invalid_argument("network is not acyclic");
  }
  auto pi = [&](int v) { return q[v] - q[SkewSymmetricNetwork::node_mate(v)]; };

  // one-sided half: nodes of nonnegative potential plus one fresh node per
  // crossing arc
  std::vector<int> gid(n, -1);
  int gn = 0;
  for (int v = 0; v < n; ++v)
    if (keep[v] && pi(v) >= 0) gid[v] = gn++;
  MBPInstance& gi = red.inst;
  std::vector<int> sub_node(m, -1);
  auto kept_arc = [&](int a) {
    return net.arcs[a].cap > 0 && keep[net.arcs[a].tail] &&
           keep[net.arcs[a].head];
  };
  for (int a = 0; a < m; ++a) {
    if (!kept_arc(a)) continue;
    int x = net.arcs[a].tail, y = net.arcs[a].head;
    if (pi(x) < 0 && pi(y) > 0) sub_node[a] = gn++;
  }
  gi.node_count = gn;
  gi.sink = gid[net.sink()];
  for (int a = 0; a < m; ++a) {
    if (!kept_arc(a)) continue;
    int x = net.arcs[a].tail, y = net.arcs[a].head;
    int from = -1;
    if (pi(x) >= 0)
      from = gid[x];
    else if (pi(y) > 0)
      from = sub_node[a];
    else
      continue;  // mirrored by the mate arc
    gi.tail.push_back(from);
    gi.head.push_back(gid[y]);
    gi.cap.push_back(net.arcs[a].cap);
    red.net_arc.push_back(a);
  }
  for (int v = 0; v < n; ++v)
    if (keep[v] && pi(v) == 0 && v < SkewSymmetricNetwork::node_mate(v))
      gi.source_pairs.push_back(
          {gid[v], gid[SkewSymmetricNetwork::node_mate(v)]});
  for (int a = 0; a < m; ++a)
    if (sub_node[a] >= 0 && a < net.arcs[a].mate)
      gi.source_pairs.push_back({sub_node[a], sub_node[net.arcs[a].mate]});
  return red;
}

ISFlow totally_blocking_isflow(const SkewSymmetricNetwork& net) {
  MBPReduction red = to_mbp_instance(net);
  ISFlow f = zero_flow(net);
  if (red.inst.node_count == 0) return f;
  bool all_unit = true;
  for (Cap u : red.inst.cap) all_unit &= (u == 1);
  BalancedPathSet set = all_unit ? solve_mbp(red.inst) : solve_bbf(red.inst);
  std::vector<Cap> gf = path_set_flow(red.inst, set);
  std::vector<char> imaged(net.arc_count(), 0);
  for (int ga = 0; ga < red.inst.arc_count(); ++ga) {
    f.on_arc[red.net_arc[ga]] += gf[ga];
    imaged[red.net_arc[ga]] = 1;
  }
  for (int a = 0; a < net.arc_count(); ++a) {
    int am = net.arcs[a].mate;
    if (am < a) continue;
    if (imaged[a] && imaged[am]) {
      if (f.on_arc[a] != f.on_arc[am])
        throw std::logic_error("asymmetric usage across a split arc pair");
    } else if (imaged[a]) {
      f.on_arc[am] = f.on_arc[a];
    } else {
      f.on_arc[a] = f.on_arc[am];
    }
  }
  for (int a = 0; a < net.arc_count(); ++a) {
    if (net.arcs[a].tail == net.source()) f.value += f.on_arc[a];
    if (net.arcs[a].head == net.source()) f.value -= f.on_arc[a];
  }
  return f;
}

bool oracle_mbp_good_pair(const MBPInstance& inst,
                          const std::vector<Cap>& remaining) {
  const int n = inst.node_count, m = inst.arc_count();
  if (static_cast<int>(remaining.size()) != m)
    throw std::invalid_argument("residual vector size mismatch");
  std::vector<Cap> rem = remaining;
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < m; ++a) out[inst.tail[a]].push_back(a);
  auto reaches = [&](int from) {
    std::vector<char> r(n, 0);
    std::vector<int> stack{from};
    r[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == inst.sink) return true;
      for (int a : out[v])
        if (rem[a] > 0 && !r[inst.head[a]]) {
          r[inst.head[a]] = 1;
          stack.push_back(inst.head[a]);
        }
    }
    return false;
  };
  for (auto [z, zm] : inst.source_pairs) {
    // all routes from z (simple in the acyclic graph), then reachability
    // for the mate over what is left
    bool found = false;
    auto dfs = [&](auto&& self, int v) -> void {
      if (found) return;
      if (v == inst.sink) {
        found = reaches(zm);
        return;
      }
      for (int a : out[v]) {
        if (rem[a] <= 0) continue;
        --rem[a];
        self(self, inst.head[a]);
        ++rem[a];
        if (found) return;
      }
    };
    dfs(dfs, z);
    if (found) return true;
  }
  return false;
}

}  // namespace ssf
