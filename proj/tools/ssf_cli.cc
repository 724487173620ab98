// Batch front-end: parse or generate instances, solve, verify, report.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssf/blockphase.h"
#include "ssf/certify.h"
#include "ssf/compress.h"
#include "ssf/core.h"
#include "ssf/decompose.h"
#include "ssf/gen.h"
#include "ssf/reductions.h"
#include "ssf/regpath.h"
#include "ssf/solvers.h"

using namespace ssf;
using nlohmann::json;

namespace {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail_at(const std::string& path, int line,
                          const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

// Line reader skipping blanks and 'c' comment lines.
struct Lines {
  std::ifstream in;
  std::string path;
  int no = 0;

  explicit Lines(const std::string& p) : in(p), path(p) {
    if (!in) throw ParseError("cannot open " + p);
  }
  bool next(std::vector<std::string>& tok) {
    std::string line;
    while (std::getline(in, line)) {
      ++no;
      std::istringstream ss(line);
      tok.clear();
      std::string w;
      while (ss >> w) tok.push_back(w);
      if (tok.empty() || tok[0] == "c") continue;
      return true;
    }
    return false;
  }
  long long num(const std::string& s) {
    try {
      size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail_at(path, no, "not a number: " + s);
    }
  }
};

int file_mate(int v) { return v % 2 ? v + 1 : v - 1; }  // 1-indexed

SkewSymmetricNetwork read_ssf(const std::string& path) {
  Lines f(path);
  std::vector<std::string> t;
  if (!f.next(t) || t.size() != 4 || t[0] != "p" || t[1] != "ssf")
    fail_at(path, f.no, "expected problem line: p ssf <nodes> <arcs>");
  int n = static_cast<int>(f.num(t[2]));
  int m = static_cast<int>(f.num(t[3]));
  if (n < 2 || n % 2) fail_at(path, f.no, "node count must be even and >= 2");
  if (m < 0 || m % 2) fail_at(path, f.no, "arcs must come in mate pairs");
  struct Raw {
    int t, h;
    Cap c;
    int line;
  };
  std::vector<Raw> raw;
  while (f.next(t)) {
    if (t[0] != "a" || t.size() != 4) fail_at(path, f.no, "expected: a <tail> <head> <cap>");
    int a = static_cast<int>(f.num(t[1])), b = static_cast<int>(f.num(t[2]));
    Cap c = f.num(t[3]);
    if (a < 1 || a > n || b < 1 || b > n) fail_at(path, f.no, "node out of range");
    raw.push_back({a, b, c, f.no});
  }
  if (static_cast<int>(raw.size()) != m)
    fail_at(path, f.no, "arc count differs from the problem line");
  SkewSymmetricNetwork net;
  net.node_count = n;
  for (int i = 0; i < m; i += 2) {
    const Raw &a = raw[i], &b = raw[i + 1];
    if (b.t != file_mate(a.h) || b.h != file_mate(a.t) || b.c != a.c)
      fail_at(path, b.line, "arc is not the mate of the preceding one");
    net.add_arc_pair(a.t - 1, a.h - 1, a.c);
  }
  auto errs = validate_network(net);
  if (!errs.empty()) throw ParseError(path + ": " + errs[0]);
  return net;
}

void write_ssf(const SkewSymmetricNetwork& net, std::ostream& out) {
  std::vector<std::pair<int, int>> order;  // (arc, mate) with arc first
  for (int a = 0; a < net.arc_count(); ++a)
    if (a < net.arcs[a].mate) order.push_back({a, net.arcs[a].mate});
  out << "p ssf " << net.node_count << " " << 2 * order.size() << "\n";
  for (auto [a, am] : order) {
    out << "a " << net.arcs[a].tail + 1 << " " << net.arcs[a].head + 1 << " "
        << net.arcs[a].cap << "\n";
    out << "a " << net.arcs[am].tail + 1 << " " << net.arcs[am].head + 1 << " "
        << net.arcs[am].cap << "\n";
  }
}

MatchingInstance read_edge(const std::string& path) {
  Lines f(path);
  std::vector<std::string> t;
  if (!f.next(t) || t.size() != 4 || t[0] != "p" || t[1] != "edge")
    fail_at(path, f.no, "expected problem line: p edge <n> <m>");
  int n = static_cast<int>(f.num(t[2]));
  int m = static_cast<int>(f.num(t[3]));
  if (n < 1 || m < 0) fail_at(path, f.no, "bad sizes");
  MatchingInstance inst;
  inst.n = n;
  inst.b0.assign(n, 0);
  inst.b.assign(n, 1);
  while (f.next(t)) {
    if (t[0] == "e" && t.size() == 3) {
      int u = static_cast<int>(f.num(t[1])), v = static_cast<int>(f.num(t[2]));
      if (u < 1 || u > n || v < 1 || v > n || u == v)
        fail_at(path, f.no, "bad edge endpoints");
      inst.edges.push_back({u - 1, v - 1});
      inst.u0.push_back(0);
      inst.u.push_back(1);
    } else if (t[0] == "b" && t.size() == 4) {
      int v = static_cast<int>(f.num(t[1]));
      if (v < 1 || v > n) fail_at(path, f.no, "node out of range");
      inst.b0[v - 1] = f.num(t[2]);
      inst.b[v - 1] = f.num(t[3]);
    } else if (t[0] == "u" && t.size() == 4) {
      int e = static_cast<int>(f.num(t[1]));
      if (e < 1 || e > static_cast<int>(inst.edges.size()))
        fail_at(path, f.no, "edge index out of range (u lines follow e lines)");
      inst.u0[e - 1] = f.num(t[2]);
      inst.u[e - 1] = f.num(t[3]);
    } else {
      fail_at(path, f.no, "expected e / b / u line");
    }
  }
  if (static_cast<int>(inst.edges.size()) != m)
    fail_at(path, f.no, "edge count differs from the problem line");
  return inst;
}

MBPInstance read_mbp(const std::string& path) {
  Lines f(path);
  std::vector<std::string> t;
  if (!f.next(t) || t.size() != 5 || t[0] != "p" || t[1] != "mbp")
    fail_at(path, f.no, "expected problem line: p mbp <nodes> <arcs> <pairs>");
  int n = static_cast<int>(f.num(t[2]));
  int m = static_cast<int>(f.num(t[3]));
  int k = static_cast<int>(f.num(t[4]));
  MBPInstance inst;
  inst.node_count = n;
  inst.sink = -1;
  std::vector<Cap> caps;
  bool any_cap = false;
  while (f.next(t)) {
    if (t[0] == "t" && t.size() == 2) {
      inst.sink = static_cast<int>(f.num(t[1])) - 1;
    } else if (t[0] == "z" && t.size() == 3) {
      inst.source_pairs.push_back({static_cast<int>(f.num(t[1])) - 1,
                                   static_cast<int>(f.num(t[2])) - 1});
    } else if (t[0] == "a" && (t.size() == 3 || t.size() == 4)) {
      inst.tail.push_back(static_cast<int>(f.num(t[1])) - 1);
      inst.head.push_back(static_cast<int>(f.num(t[2])) - 1);
      Cap c = t.size() == 4 ? f.num(t[3]) : 1;
      if (c != 1) any_cap = true;
      caps.push_back(c);
    } else {
      fail_at(path, f.no, "expected t / z / a line");
    }
  }
  if (static_cast<int>(inst.tail.size()) != m)
    fail_at(path, f.no, "arc count differs from the problem line");
  if (static_cast<int>(inst.source_pairs.size()) != k)
    fail_at(path, f.no, "pair count differs from the problem line");
  if (inst.sink < 0) fail_at(path, f.no, "missing sink line");
  if (any_cap) inst.cap = std::move(caps);
  return inst;
}

ISFlow read_flow(const std::string& path, const SkewSymmetricNetwork& net) {
  Lines f(path);
  std::vector<std::string> t;
  ISFlow flow;
  flow.on_arc.assign(net.arc_count(), 0);
  bool have_value = false;
  while (f.next(t)) {
    if (t[0] == "value" && t.size() == 2) {
      flow.value = f.num(t[1]);
      have_value = true;
    } else if (t[0] == "f" && t.size() == 3) {
      int a = static_cast<int>(f.num(t[1]));
      if (a < 1 || a > net.arc_count()) fail_at(path, f.no, "arc out of range");
      flow.on_arc[a - 1] = f.num(t[2]);
    } else {
      fail_at(path, f.no, "expected value / f line");
    }
  }
  if (!have_value) fail_at(path, f.no, "missing value line");
  return flow;
}

void write_flow(const ISFlow& f, std::ostream& out) {
  out << "value " << f.value << "\n";
  for (size_t a = 0; a < f.on_arc.size(); ++a)
    if (f.on_arc[a] != 0) out << "f " << a + 1 << " " << f.on_arc[a] << "\n";
}

OddBarrier read_certificate(const std::string& path) {
  Lines f(path);
  std::vector<std::string> t;
  OddBarrier b;
  bool have_cap = false;
  while (f.next(t)) {
    if (t[0] == "capacity" && t.size() == 2) {
      b.capacity = f.num(t[1]);
      have_cap = true;
    } else if (t[0] == "A") {
      for (size_t i = 1; i < t.size(); ++i)
        b.A.push_back(static_cast<int>(f.num(t[i])) - 1);
    } else if (t[0] == "X") {
      b.X.emplace_back();
      for (size_t i = 1; i < t.size(); ++i)
        b.X.back().push_back(static_cast<int>(f.num(t[i])) - 1);
    } else {
      fail_at(path, f.no, "expected capacity / A / X line");
    }
  }
  if (!have_cap) fail_at(path, f.no, "missing capacity line");
  return b;
}

void write_certificate(const OddBarrier& b, std::ostream& out) {
  out << "capacity " << b.capacity << "\n";
  out << "A";
  for (int v : b.A) out << " " << v + 1;
  out << "\n";
  for (const auto& x : b.X) {
    out << "X";
    for (int v : x) out << " " << v + 1;
    out << "\n";
  }
}

using Solver = SolveReport (*)(const SkewSymmetricNetwork&);

Solver pick_solver(const std::string& algo) {
  static const std::map<std::string, Solver> table = {
      {"aug", max_isflow_augmenting},
      {"sapm", max_isflow_sapm},
      {"anstee", max_isflow_anstee},
      {"sbfm", max_isflow_sbfm},
  };
  auto it = table.find(algo);
  if (it == table.end()) throw ParseError("unknown algorithm: " + algo);
  return it->second;
}

void self_check(const SkewSymmetricNetwork& net, const SolveReport& rep) {
  auto errs = verify_isflow(net, rep.flow);
  if (!errs.empty()) throw std::runtime_error("flow check failed: " + errs[0]);
  if (auto bad = verify_odd_barrier(net, rep.certificate))
    throw std::runtime_error("certificate check failed: " + *bad);
  if (rep.certificate.capacity != rep.flow.value)
    throw std::runtime_error("certificate capacity differs from flow value");
}

void append_report(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open report file " + path);
  out << j.dump() << "\n";
}

std::vector<int> arc_path_nodes(const std::vector<int>& tails,
                                const std::vector<int>& heads,
                                const std::vector<int>& arcs) {
  std::vector<int> nodes;
  if (arcs.empty()) return nodes;
  nodes.push_back(tails[arcs[0]]);
  for (int a : arcs) nodes.push_back(heads[a]);
  return nodes;
}

void print_path_line(const char* tag, const std::vector<int>& nodes) {
  std::cout << tag;
  for (int v : nodes) std::cout << " " << v + 1;
  std::cout << "\n";
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_solve(const std::string& path, const std::string& algo,
              const std::string& out_path, const std::string& report) {
  SkewSymmetricNetwork net = read_ssf(path);
  auto t0 = std::chrono::steady_clock::now();
  SolveReport rep = pick_solver(algo)(net);
  double ms = ms_since(t0);
  self_check(net, rep);
  std::cout << "value " << rep.flow.value << "\n";
  for (int a = 0; a < net.arc_count(); ++a)
    if (rep.flow.on_arc[a] != 0)
      std::cout << "f " << a + 1 << " " << rep.flow.on_arc[a] << "\n";
  write_certificate(rep.certificate, std::cout);
  std::cout << "iterations " << rep.phase_or_iteration_count << "\n";
  if (!rep.rdists.empty()) {
    std::cout << "rdists";
    for (int d : rep.rdists) std::cout << " " << d;
    std::cout << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    write_flow(rep.flow, out);
  }
  append_report(report, json{{"schema", 1},
                             {"cmd", "solve"},
                             {"algo", algo},
                             {"value", rep.flow.value},
                             {"phases", rep.phase_or_iteration_count},
                             {"rdists", rep.rdists},
                             {"ms", ms}});
  return 0;
}

int cmd_match(const std::string& path, const std::string& algo, bool compress,
              double delta, const std::string& report) {
  MatchingInstance inst = read_edge(path);
  auto [bn, bm] = matching_to_network(inst);
  bool has_lower = false;
  for (Cap l : bn.lower) has_lower |= l > 0;
  if (compress && has_lower)
    throw std::runtime_error("--compress needs an instance without lower bounds");
  auto t0 = std::chrono::steady_clock::now();
  ISFlow flow;
  json extra;
  if (has_lower) {
    auto el = eliminate_lower_bounds(bn);
    SolveReport rep = pick_solver(algo)(el.net);
    self_check(el.net, rep);
    if (!el.feasible(rep.flow)) {
      std::cout << "infeasible\n";
      return 1;
    }
    flow = el.induce(bn.net, rep.flow);
  } else if (compress) {
    auto part = symmetric_clique_partition(bn.net, delta);
    auto st = compress_to_stars(bn.net, part);
    SolveReport rep = pick_solver(algo)(st.net);
    self_check(st.net, rep);
    flow = decompress_flow(bn.net, st, rep.flow);
    long long middle = 0;
    for (const Arc& a : bn.net.arcs) middle += (a.tail >= 2 && a.head >= 2);
    double n_side = (bn.net.node_count - 2) / 2.0;
    double beta = std::log(n_side * n_side / middle) / std::log(n_side);
    std::cout << "arcs original " << bn.net.arc_count() << " compressed "
              << st.net.arc_count() << "\n";
    std::cout << "partition size " << part.size() << " m*beta "
              << middle * beta << "\n";
    extra["arcs_original"] = bn.net.arc_count();
    extra["arcs_compressed"] = st.net.arc_count();
    extra["partition_size"] = part.size();
  } else {
    SolveReport rep = pick_solver(algo)(bn.net);
    self_check(bn.net, rep);
    flow = rep.flow;
  }
  double ms = ms_since(t0);
  auto errs = verify_isflow(bn.net, flow);
  if (!errs.empty()) throw std::runtime_error("flow check failed: " + errs[0]);
  auto sel = flow_to_matching(bn, flow, bm);
  std::cout << "matching " << flow.value / 2 << "\n";
  for (size_t e = 0; e < sel.size(); ++e)
    if (sel[e] > 0) std::cout << "e " << e + 1 << " " << sel[e] << "\n";
  json j{{"schema", 1},   {"cmd", "match"},
         {"algo", algo},  {"value", flow.value / 2},
         {"ms", ms}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  append_report(report, j);
  return 0;
}

int cmd_rpath(const std::string& path) {
  SkewSymmetricNetwork net = read_ssf(path);
  auto res = find_regular_path(net);
  if (res.path) {
    std::vector<int> tails, heads;
    for (const Arc& a : net.arcs) {
      tails.push_back(a.tail);
      heads.push_back(a.head);
    }
    print_path_line("path", arc_path_nodes(tails, heads, *res.path));
  } else {
    std::cout << "A:";
    for (int v : res.barrier->A) std::cout << " " << v + 1;
    std::cout << "\n";
    for (size_t i = 0; i < res.barrier->X.size(); ++i) {
      std::cout << "X" << i + 1 << ":";
      for (int v : res.barrier->X[i]) std::cout << " " << v + 1;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_mbp(const std::string& path) {
  MBPInstance inst = read_mbp(path);
  BalancedPathSet set =
      inst.cap.empty() ? solve_mbp(inst) : solve_bbf(inst);
  std::cout << "pairs " << set.pairs.size() << "\n";
  for (const GoodPair& p : set.pairs) {
    std::cout << "pair " << p.z + 1 << " " << p.zm + 1 << " alpha " << p.alpha
              << "\n";
    print_path_line("path", arc_path_nodes(inst.tail, inst.head, p.path_z));
    print_path_line("path", arc_path_nodes(inst.tail, inst.head, p.path_zm));
  }
  return 0;
}

int cmd_decompose(const std::string& path, const std::string& flow_path) {
  SkewSymmetricNetwork net = read_ssf(path);
  ISFlow f = read_flow(flow_path, net);
  auto errs = verify_isflow(net, f);
  if (!errs.empty()) throw std::runtime_error("infeasible flow: " + errs[0]);
  auto dec = symmetric_decomposition(net, f);
  std::vector<int> tails, heads;
  for (const Arc& a : net.arcs) {
    tails.push_back(a.tail);
    heads.push_back(a.head);
  }
  for (const ElementaryFlow& ef : dec.members) {
    std::cout << (ef.is_cycle ? "cycle " : "path ") << ef.delta;
    for (int v : arc_path_nodes(tails, heads, ef.path)) std::cout << " " << v + 1;
    std::cout << "\n";
  }
  return 0;
}

int cmd_compress(const std::string& path, double delta,
                 const std::string& out_path) {
  MatchingInstance inst = read_edge(path);
  auto [bn, bm] = matching_to_network(inst);
  (void)bm;
  auto part = symmetric_clique_partition(bn.net, delta);
  auto st = compress_to_stars(bn.net, part);
  long long middle = 0;
  for (const Arc& a : bn.net.arcs) middle += (a.tail >= 2 && a.head >= 2);
  double n_side = (bn.net.node_count - 2) / 2.0;
  double beta = std::log(n_side * n_side / middle) / std::log(n_side);
  std::cout << "arcs original " << bn.net.arc_count() << " compressed "
            << st.net.arc_count() << "\n";
  std::cout << "partition size " << part.size() << " m*beta " << middle * beta
            << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    write_ssf(st.net, out);
  }
  return 0;
}

int cmd_verify(const std::string& path, const std::string& flow_path,
               const std::string& cert_path) {
  SkewSymmetricNetwork net = read_ssf(path);
  int rc = 0;
  ISFlow f = read_flow(flow_path, net);
  for (const auto& e : verify_isflow(net, f)) {
    std::cout << "flow: " << e << "\n";
    rc = 1;
  }
  if (!cert_path.empty()) {
    OddBarrier b = read_certificate(cert_path);
    if (auto bad = verify_odd_barrier(net, b)) {
      std::cout << "certificate: " << *bad << "\n";
      rc = 1;
    } else if (b.capacity != f.value) {
      std::cout << "certificate: capacity " << b.capacity
                << " differs from flow value " << f.value << "\n";
      rc = 1;
    }
  }
  std::cout << (rc == 0 ? "ok" : "failed") << "\n";
  return rc;
}

int cmd_gen(const std::string& kind, int n, int m, int pairs, int arcs,
            Cap maxcap, unsigned long long seed, const std::string& out_path) {
  Rng rng(seed);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path);
    out = &file;
  }
  if (kind == "random-graph" || kind == "dense") {
    auto edges = kind == "dense" ? gen_dense_graph(n, rng)
                                 : gen_random_graph(n, m, rng);
    *out << "p edge " << n << " " << edges.size() << "\n";
    for (auto [u, v] : edges) *out << "e " << u + 1 << " " << v + 1 << "\n";
  } else if (kind == "random-ssf") {
    SkewSymmetricNetwork net = gen_random_ssf(pairs, arcs, maxcap, rng);
    write_ssf(net, *out);
  } else if (kind == "random-mbp") {
    SkewSymmetricNetwork net = gen_random_acyclic_ssf(pairs, arcs, maxcap, rng);
    MBPReduction red = to_mbp_instance(net);
    const MBPInstance& i = red.inst;
    *out << "p mbp " << i.node_count << " " << i.arc_count() << " "
         << i.source_pairs.size() << "\n";
    *out << "t " << i.sink + 1 << "\n";
    for (auto [z, zm] : i.source_pairs)
      *out << "z " << z + 1 << " " << zm + 1 << "\n";
    for (int a = 0; a < i.arc_count(); ++a) {
      *out << "a " << i.tail[a] + 1 << " " << i.head[a] + 1;
      if (!i.cap.empty()) *out << " " << i.cap[a];
      *out << "\n";
    }
  } else {
    throw ParseError("unknown kind: " + kind);
  }
  return 0;
}

int cmd_bench(const std::string& task, int n, int m, unsigned long long seed,
              const std::string& report) {
  Rng rng(seed);
  if (task == "sbfm") {
    auto edges = gen_random_graph(n, m, rng);
    auto inst = MatchingInstance::cardinality(n, std::move(edges));
    auto [bn, bm] = matching_to_network(inst);
    (void)bm;
    auto t0 = std::chrono::steady_clock::now();
    SolveReport rep = max_isflow_sbfm(bn.net);
    double ms = ms_since(t0);
    self_check(bn.net, rep);
    std::cout << "value " << rep.flow.value << " phases "
              << rep.phase_or_iteration_count << " ms " << ms << "\n";
    append_report(report, json{{"schema", 1},
                               {"cmd", "bench"},
                               {"task", task},
                               {"n", n},
                               {"m", m},
                               {"value", rep.flow.value},
                               {"phases", rep.phase_or_iteration_count},
                               {"ms", ms}});
  } else if (task == "mbp") {
    // union of random index-increasing walks from fresh source pairs to a
    // common sink: the structural preconditions hold by construction
    MBPInstance inst;
    const int inner = std::max(1, m / 8), len = 7;
    int sink = inner;
    std::set<std::pair<int, int>> seen;
    auto arc = [&](int t, int h) {
      if (seen.insert({t, h}).second) {
        inst.tail.push_back(t);
        inst.head.push_back(h);
      }
    };
    for (int p = 0; p < n; ++p) {
      int z = inner + 1 + 2 * p, zm = z + 1;
      inst.source_pairs.push_back({z, zm});
      for (int side = 0; side < 2; ++side) {
        int at = side ? zm : z, rank = -1;
        for (int step = 0; step < len; ++step) {
          int next = rank + 1 +
                     static_cast<int>(rng() % std::max(1, inner - rank - 1));
          if (next >= inner) break;
          arc(at, next);
          at = next;
          rank = next;
        }
        arc(at, sink);
      }
    }
    std::vector<int> relabel(inner + 1 + 2 * n, -1);
    relabel[sink] = 0;
    for (int a = 0; a < inst.arc_count(); ++a)
      relabel[inst.tail[a]] = relabel[inst.head[a]] = 0;
    int next_id = 0;
    for (auto& r : relabel)
      if (r == 0) r = next_id++;
    inst.node_count = next_id;
    inst.sink = relabel[sink];
    for (int a = 0; a < inst.arc_count(); ++a) {
      inst.tail[a] = relabel[inst.tail[a]];
      inst.head[a] = relabel[inst.head[a]];
    }
    for (auto& [z, zm] : inst.source_pairs) {
      z = relabel[z];
      zm = relabel[zm];
    }
    auto t0 = std::chrono::steady_clock::now();
    BalancedPathSet set = solve_mbp(inst);
    double ms = ms_since(t0);
    std::cout << "pairs " << set.pairs.size() << " arcs " << inst.arc_count()
              << " ms " << ms << "\n";
    append_report(report, json{{"schema", 1},
                               {"cmd", "bench"},
                               {"task", task},
                               {"arcs", inst.arc_count()},
                               {"pairs", set.pairs.size()},
                               {"ms", ms}});
  } else {
    throw ParseError("unknown bench task: " + task);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum skew-symmetric flow toolkit"};
  app.require_subcommand(1);

  std::string instance, flow_path, cert_path, out_path, report;
  std::string algo = "sbfm", kind = "random-ssf", task = "sbfm";
  bool compress = false;
  double delta = 0.25;
  int gn = 10, gm = 20, gpairs = 10, garcs = 30;
  Cap gmaxcap = 3;
  unsigned long long seed = 1;

  auto* solve = app.add_subcommand("solve", "maximum flow with certificate");
  solve->add_option("instance", instance)->required();
  solve->add_option("--algo", algo, "aug|sapm|anstee|sbfm");
  solve->add_option("--out", out_path, "write the flow to a file");
  solve->add_option("--report", report, "append a JSON report line");

  auto* match = app.add_subcommand("match", "maximum matching via flow");
  match->add_option("instance", instance)->required();
  match->add_option("--algo", algo, "aug|sapm|anstee|sbfm");
  match->add_flag("--compress", compress, "clique-compress dense instances");
  match->add_option("--delta", delta, "compression exponent in (0, 1/2)");
  match->add_option("--report", report, "append a JSON report line");

  auto* bmatch = app.add_subcommand("bmatch", "degree-bounded matching");
  bmatch->add_option("instance", instance)->required();
  bmatch->add_option("--algo", algo, "aug|sapm|anstee|sbfm");
  bmatch->add_option("--report", report, "append a JSON report line");

  auto* rpath = app.add_subcommand("rpath", "regular path or barrier");
  rpath->add_option("instance", instance)->required();

  auto* mbp = app.add_subcommand("mbp", "maximal balanced path set");
  mbp->add_option("instance", instance)->required();

  auto* dec = app.add_subcommand("decompose", "elementary flow decomposition");
  dec->add_option("instance", instance)->required();
  dec->add_option("flow", flow_path)->required();

  auto* comp = app.add_subcommand("compress", "clique-compress a matching instance");
  comp->add_option("instance", instance)->required();
  comp->add_option("--delta", delta, "compression exponent in (0, 1/2)");
  comp->add_option("--out", out_path, "write the compressed network");

  auto* ver = app.add_subcommand("verify", "check a flow and certificate");
  ver->add_option("instance", instance)->required();
  ver->add_option("--flow", flow_path)->required();
  ver->add_option("--certificate", cert_path);

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", kind, "random-graph|dense|random-ssf|random-mbp");
  gen->add_option("--n", gn, "graph nodes");
  gen->add_option("--m", gm, "graph edges");
  gen->add_option("--pairs", gpairs, "node pairs");
  gen->add_option("--arcs", garcs, "arc pairs");
  gen->add_option("--maxcap", gmaxcap, "capacity bound");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "timing runs");
  bench->add_option("--task", task, "sbfm|mbp");
  bench->add_option("--n", gn, "nodes (sbfm) or node pairs (mbp)");
  bench->add_option("--m", gm, "edges (sbfm) or arc pairs (mbp)");
  bench->add_option("--seed", seed);
  bench->add_option("--report", report, "append a JSON report line");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*solve) return cmd_solve(instance, algo, out_path, report);
    if (*match) return cmd_match(instance, algo, compress, delta, report);
    if (*bmatch) return cmd_match(instance, algo, false, delta, report);
    if (*rpath) return cmd_rpath(instance);
    if (*mbp) return cmd_mbp(instance);
    if (*dec) return cmd_decompose(instance, flow_path);
    if (*comp) return cmd_compress(instance, delta, out_path);
    if (*ver) return cmd_verify(instance, flow_path, cert_path);
    if (*gen) return cmd_gen(kind, gn, gm, gpairs, garcs, gmaxcap, seed, out_path);
    if (*bench) return cmd_bench(task, gn, gm, seed, report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
