// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared fixtures and independent reference implementations for the test
// suite.  The reference code here deliberately avoids the library's own
// operators (no apply_T / apply_Tmu / cycle_extremes calls): values asserted
// against it are derived twice, once by the library and once by the naive
// recursions below.

#pragma once

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rsp/cost.hpp"
#include "rsp/graph.hpp"
#include "rsp/types.hpp"

namespace rsp::testing {

/// Literal cost vectors: costs({1, Cost::infinity(), Rational(1, 2)}).
inline CostVector costs(const std::vector<Cost>& entries) {
  CostVector j(static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) j.at(static_cast<int>(i) + 1) = entries[i];
  return j;
}

// ---------------------------------------------------------------------------
// Named desk-scale fixtures.
// ---------------------------------------------------------------------------

/// Single node, single control; the opponent chooses between staying (length
/// a) and finishing (length 0).  Worst-case cost is +inf for a > 0 and 0 for
/// a <= 0; the lone policy is regular exactly when a < 0.
inline RspGraph make_loop_or_finish(const Rational& a) {
  RspGraph g(1);
  const int u = g.add_control(NodeId(1), "u");
  g.add_arc(NodeId(1), u, NodeId(1), a);
  g.add_arc(NodeId(1), u, NodeId::destination(), 0);
  return g;
}

/// make_loop_or_finish plus a guaranteed-stop control of length 1.  For
/// a = 0 the improper policy costs 0 while the only proper policy costs 1,
/// so the unrestricted optimum and the proper-policy optimum differ.
inline RspGraph make_loop_or_stop(const Rational& a) {
  RspGraph g(1);
  int u = g.add_control(NodeId(1), "u");
  g.add_arc(NodeId(1), u, NodeId(1), a);
  g.add_arc(NodeId(1), u, NodeId::destination(), 0);
  u = g.add_control(NodeId(1), "ubar");
  g.add_arc(NodeId(1), u, NodeId::destination(), 1);
  return g;
}

/// Single node with a free self-loop and a unit-cost stop.  T J = min(J, 1),
/// every J <= 1 is a fixed point, and the best terminating policy costs 1.
inline RspGraph make_zero_cycle() {
  RspGraph g(1);
  int u = g.add_control(NodeId(1), "stay");
  g.add_arc(NodeId(1), u, NodeId(1), 0);
  u = g.add_control(NodeId(1), "stop");
  g.add_arc(NodeId(1), u, NodeId::destination(), 1);
  return g;
}

/// Single node with a length -1 self-loop and a free stop.  Value iteration
/// from +inf decreases forever (T^k -> -inf on the greedy branch), so the
/// finite-termination bound is genuinely exceeded.
inline RspGraph make_negative_self() {
  RspGraph g(1);
  int u = g.add_control(NodeId(1), "stay");
  g.add_arc(NodeId(1), u, NodeId(1), -1);
  u = g.add_control(NodeId(1), "stop");
  g.add_arc(NodeId(1), u, NodeId::destination(), 0);
  return g;
}

/// Four-node instance with strictly positive lengths whose optimal values
/// settle one node per sweep: J* = (3, 6, 5, 4), discovered in layer order
/// {1}, {4}, {3}, {2}.  Label-setting enters t, 1, 4, 3, 2 with labels
/// 0, 3, 4, 5, 6.  All lengths nonnegative, all cycles positive.
inline RspGraph make_layered4() {
  RspGraph g(4);
  int u = g.add_control(NodeId(1), "a");
  g.add_arc(NodeId(1), u, NodeId::destination(), 3);
  u = g.add_control(NodeId(1), "b");
  g.add_arc(NodeId(1), u, NodeId(1), 9);
  g.add_arc(NodeId(1), u, NodeId(2), 9);
  u = g.add_control(NodeId(2), "a");
  g.add_arc(NodeId(2), u, NodeId(3), 1);
  g.add_arc(NodeId(2), u, NodeId(1), 1);
  u = g.add_control(NodeId(2), "b");
  g.add_arc(NodeId(2), u, NodeId(2), 1);
  g.add_arc(NodeId(2), u, NodeId::destination(), 1);
  u = g.add_control(NodeId(3), "a");
  g.add_arc(NodeId(3), u, NodeId(4), 1);
  g.add_arc(NodeId(3), u, NodeId::destination(), 1);
  u = g.add_control(NodeId(3), "b");
  g.add_arc(NodeId(3), u, NodeId(3), 1);
  u = g.add_control(NodeId(4), "a");
  g.add_arc(NodeId(4), u, NodeId(1), 1);
  u = g.add_control(NodeId(4), "b");
  g.add_arc(NodeId(4), u, NodeId(4), 2);
  g.add_arc(NodeId(4), u, NodeId(2), 2);
  return g;
}

/// Two-node instance with a zero-length cycle whose asynchronous optimistic
/// policy iteration, run with Jacobi block events and without the threshold
/// vector V, orbits forever between (4,2) and (3,3); the V version pins the
/// componentwise minimum and lands on the optimum (3,2).  Control order
/// matters: the follow control is declared first at both nodes so the tie at
/// node 2 (back = stop = 2) latches the cycling policy.
inline RspGraph make_oscillation_pair() {
  RspGraph g(2);
  int u = g.add_control(NodeId(1), "go");
  g.add_arc(NodeId(1), u, NodeId(2), 1);
  u = g.add_control(NodeId(1), "stop");
  g.add_arc(NodeId(1), u, NodeId::destination(), 5);
  u = g.add_control(NodeId(2), "back");
  g.add_arc(NodeId(2), u, NodeId(1), -1);
  u = g.add_control(NodeId(2), "stop");
  g.add_arc(NodeId(2), u, NodeId::destination(), 2);
  return g;
}

// ---------------------------------------------------------------------------
// Independent reference computations (naive recursions, no library operators).
// ---------------------------------------------------------------------------

/// Worst-case total length of k stages under mu starting at x, by direct
/// recursion over the adversary's choices.  Equals T_mu^k 0 by definition.
inline Cost ref_stage_cost(const RspGraph& g, const Policy& mu, NodeId x,
                           int k) {
  if (x.is_destination() || k == 0) return Cost(0);
  Cost worst = Cost::minus_infinity();
  for (const Successor& s : g.successors(x, mu.choice(x))) {
    Cost c = Cost(s.length) + ref_stage_cost(g, mu, s.node, k - 1);
    if (worst < c) worst = c;
  }
  return worst;
}

/// One application of the min-max operator at x, by direct loops.
inline Cost ref_T_at(const RspGraph& g, NodeId x, const CostVector& j) {
  Cost best = Cost::infinity();
  for (int u = 0; u < g.num_controls(x); ++u) {
    Cost worst = Cost::minus_infinity();
    bool defined = true;
    for (const Successor& s : g.successors(x, u)) {
      Cost tail = s.node.is_destination() ? Cost(0) : j.at(s.node);
      if (tail.is_neg_infinity()) continue;  // dominated unless all are
      if (tail.is_pos_infinity()) {
        worst = Cost::infinity();
        continue;
      }
      Cost c = Cost(s.length) + tail;
      if (worst < c) worst = c;
    }
    (void)defined;
    if (worst.is_neg_infinity()) worst = Cost::minus_infinity();
    if (worst < best) best = worst;
  }
  return best;
}

/// All simple cycles of the policy subgraph, as (total length, arc count)
/// pairs.  Exponential DFS; fixtures are tiny.
inline void ref_cycles_visit(const RspGraph& g, const Policy& mu,
                             std::vector<int>& path, std::vector<char>& on,
                             int v, std::vector<std::pair<Rational, int>>& out) {
  on[v] = 1;
  path.push_back(v);
  for (const Successor& s : g.successors(NodeId(v + 1), mu.choice(NodeId(v + 1)))) {
    if (s.node.is_destination()) continue;
    const int w = s.node.index();
    if (!on[w]) {
      ref_cycles_visit(g, mu, path, on, w, out);
    } else {
      // close the cycle path[pos..end] -> w
      auto it = std::find(path.begin(), path.end(), w);
      if (it != path.end()) {
        Rational total = 0;
        int count = 0;
        for (auto p = it; p != path.end(); ++p) {
          int a = *p;
          int b = (p + 1 != path.end()) ? *(p + 1) : w;
          // find the arc a -> b under mu
          for (const Successor& t : g.successors(NodeId(a + 1), mu.choice(NodeId(a + 1)))) {
            if (!t.node.is_destination() && t.node.index() == b) {
              total += t.length;
              ++count;
              break;
            }
          }
        }
        out.emplace_back(total, count);
      }
    }
  }
  path.pop_back();
  on[v] = 0;
}

/// Means of all simple cycles reachable anywhere in A_mu (deduplicated).
inline std::vector<Rational> ref_cycle_means(const RspGraph& g,
                                             const Policy& mu) {
  std::vector<std::pair<Rational, int>> raw;
  const int n = g.num_nodes();
  for (int v = 0; v < n; ++v) {
    std::vector<int> path;
    std::vector<char> on(n, 0);
    ref_cycles_visit(g, mu, path, on, v, raw);
  }
  std::set<Rational> means;
  for (auto& [total, count] : raw) means.insert(Rational(total) / count);
  return {means.begin(), means.end()};
}

/// Properness by three-color cycle detection on A_mu (no library call).
inline bool ref_is_proper(const RspGraph& g, const Policy& mu) {
  const int n = g.num_nodes();
  std::vector<int> color(n, 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[s]) continue;
    stack.push_back(s);
    std::vector<int> it(n, 0);
    while (!stack.empty()) {
      int v = stack.back();
      if (color[v] == 0) color[v] = 1;
      bool advanced = false;
      const auto& succ = g.successors(NodeId(v + 1), mu.choice(NodeId(v + 1)));
      while (it[v] < static_cast<int>(succ.size())) {
        const Successor& e = succ[it[v]++];
        if (e.node.is_destination()) continue;
        int w = e.node.index();
        if (color[w] == 1) return false;  // back edge: cycle
        if (color[w] == 0) {
          stack.push_back(w);
          advanced = true;
          break;
        }
      }
      if (!advanced && it[v] >= static_cast<int>(succ.size())) {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

/// Componentwise minimum of k-stage worst costs over all proper policies,
/// enumerated with a local odometer (k = n suffices on acyclic subgraphs).
/// Returns an empty vector when no proper policy exists.
inline std::vector<Cost> ref_best_proper(const RspGraph& g) {
  const int n = g.num_nodes();
  std::vector<int> choice(n, 0);
  std::vector<Cost> best;
  while (true) {
    Policy mu{std::vector<int>(choice)};
    if (ref_is_proper(g, mu)) {
      std::vector<Cost> cost(n);
      for (int i = 0; i < n; ++i)
        cost[i] = ref_stage_cost(g, mu, NodeId(i + 1), n);
      if (best.empty()) {
        best = cost;
      } else {
        for (int i = 0; i < n; ++i)
          if (cost[i] < best[i]) best[i] = cost[i];
      }
    }
    int k = n - 1;
    while (k >= 0 && choice[k] + 1 >= g.num_controls(NodeId(k + 1))) {
      choice[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++choice[k];
  }
  return best;
}

/// Horizon long enough that the windowed limsup evaluation flags every
/// positive-mean cycle of an integer-length instance: the slowest such cycle
/// gains at least 1 per n arcs, so 2n(B+1) stages clear the divergence bound
/// B = n * max|g|.
inline int adequate_horizon(const RspGraph& g) {
  long b = 1;
  const Rational m = g.max_abs_length();
  if (m > 0) b = static_cast<long>(numerator(m) / denominator(m)) + 1;
  return 2 * g.num_nodes() * static_cast<int>(g.num_nodes() * b + 1);
}

// ---------------------------------------------------------------------------
// Process helpers for command-line tests.
// ---------------------------------------------------------------------------

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs `command` through the shell, capturing exit code and both streams.
inline RunResult run_command(const std::string& command) {
  static int counter = 0;
  const std::string base = "/tmp/rsp_test_" + std::to_string(++counter);
  const std::string out_path = base + ".out";
  const std::string err_path = base + ".err";
  const int rc =
      std::system((command + " >" + out_path + " 2>" + err_path).c_str());
  RunResult r;
  r.exit_code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

inline std::string fixture_path(const std::string& name) {
#ifdef RSP_FIXTURE_DIR
  return std::string(RSP_FIXTURE_DIR) + "/" + name;
#else
  return "tests/fixtures/" + name;
#endif
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace rsp::testing
