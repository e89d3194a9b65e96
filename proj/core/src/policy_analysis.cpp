// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/policy_analysis.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "rsp/errors.hpp"

namespace rsp {

PolicySubgraph policy_subgraph(const RspGraph& g, const Policy& mu) {
  const int n = g.num_nodes();
  PolicySubgraph sub;
  sub.succ.resize(n);
  sub.to_destination.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    NodeId x(i + 1);
    for (const Successor& s : g.successors(x, mu.choice(x))) {
      if (s.node.is_destination())
        sub.to_destination[i] = 1;
      else
        sub.succ[i].push_back(s.node.index());
    }
  }
  return sub;
}

bool is_proper(const PolicySubgraph& sub) {
  // Kahn's algorithm on the ordinary-node part; leftovers mean a cycle.
  const int n = sub.num_nodes();
  std::vector<int> indeg(n, 0);
  for (const auto& outs : sub.succ)
    for (int v : outs) ++indeg[v];
  std::deque<int> queue;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  int removed = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    ++removed;
    for (int v : sub.succ[u])
      if (--indeg[v] == 0) queue.push_back(v);
  }
  return removed == n;
}

namespace {

// Strongly connected components (Kosaraju, iterative).  Returns component id
// per node; ids are otherwise meaningless.
std::vector<int> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    // DFS with explicit stack; second visit records finish order.
    std::vector<std::pair<int, int>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < static_cast<int>(adj[u].size())) {
        int v = adj[u][next++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }

  std::vector<std::vector<int>> radj(n);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) radj[v].push_back(u);

  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = n - 1; i >= 0; --i) {
    int s = order[i];
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : radj[u])
        if (comp[v] == -1) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  return comp;
}

struct WeightedArc {
  int from, to;
  Rational weight;
};

// Karp's minimum mean cycle on one strongly connected component, exact.
// nodes: component members (graph indices); arcs: arcs inside the component,
// endpoints already relabeled to component-local indices.
std::optional<Rational> karp_min_mean(int n, const std::vector<WeightedArc>& arcs) {
  if (arcs.empty()) return std::nullopt;
  // D[k][v] = least weight over walks of exactly k arcs from node 0.
  std::vector<std::vector<std::optional<Rational>>> D(
      n + 1, std::vector<std::optional<Rational>>(n));
  D[0][0] = Rational(0);
  for (int k = 1; k <= n; ++k)
    for (const WeightedArc& a : arcs)
      if (D[k - 1][a.from]) {
        Rational cand = *D[k - 1][a.from] + a.weight;
        if (!D[k][a.to] || cand < *D[k][a.to]) D[k][a.to] = cand;
      }

  std::optional<Rational> best;
  for (int v = 0; v < n; ++v) {
    if (!D[n][v]) continue;
    std::optional<Rational> worst;  // max over k of (D_n - D_k)/(n-k)
    for (int k = 0; k < n; ++k) {
      if (!D[k][v]) continue;
      Rational mean = (*D[n][v] - *D[k][v]) / Rational(n - k);
      if (!worst || mean > *worst) worst = mean;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  return best;
}

}  // namespace

CycleExtremes cycle_extremes(const PolicySubgraph& sub, const RspGraph& g,
                             const Policy& mu) {
  const int n = sub.num_nodes();
  std::vector<int> comp = strongly_connected_components(sub.succ);

  CycleExtremes out;
  std::optional<Rational> global_min, global_max;
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    std::vector<int> local(n, -1);
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) {
        local[i] = static_cast<int>(members.size());
        members.push_back(i);
      }
    std::vector<WeightedArc> arcs, negated;
    for (int i : members) {
      NodeId x(i + 1);
      for (const Successor& s : g.successors(x, mu.choice(x))) {
        if (s.node.is_destination() || comp[s.node.index()] != c) continue;
        arcs.push_back({local[i], local[s.node.index()], s.length});
        negated.push_back({local[i], local[s.node.index()], -s.length});
      }
    }
    if (auto m = karp_min_mean(static_cast<int>(members.size()), arcs)) {
      if (!global_min || *m < *global_min) global_min = *m;
    }
    if (auto m = karp_min_mean(static_cast<int>(members.size()), negated)) {
      Rational mx = -*m;
      if (!global_max || mx > *global_max) global_max = mx;
    }
  }
  if (global_min) out.min_mean = Cost(*global_min);
  if (global_max) out.max_mean = Cost(*global_max);
  return out;
}

bool destination_connected(const PolicySubgraph& sub) {
  const int n = sub.num_nodes();
  std::vector<std::vector<int>> radj(n);
  for (int u = 0; u < n; ++u)
    for (int v : sub.succ[u]) radj[v].push_back(u);
  std::vector<char> reached(n, 0);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (sub.to_destination[i]) {
      reached[i] = 1;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : radj[u])
      if (!reached[v]) {
        reached[v] = 1;
        stack.push_back(v);
      }
  }
  return std::all_of(reached.begin(), reached.end(),
                     [](char c) { return c != 0; });
}

PolicyClassification classify_policy(const RspGraph& g, const Policy& mu) {
  PolicySubgraph sub = policy_subgraph(g, mu);
  PolicyClassification cls;
  cls.proper = is_proper(sub);
  cls.destination_connected = destination_connected(sub);
  CycleExtremes ext = cycle_extremes(sub, g, mu);
  cls.min_cycle_mean = ext.min_mean;
  cls.max_cycle_mean = ext.max_mean;
  // A proper policy is vacuously regular (acyclic => max mean is -inf, and a
  // proper subgraph is always destination-connected).
  cls.regular =
      cls.destination_connected && cls.max_cycle_mean < Cost(0);
  return cls;
}

namespace {

// Shared fixpoint for termination reachability.  Pass-based (the region is
// frozen while a pass scans), so the pass at which a node settles equals its
// layer index and the recorded control choices form a proper policy.
struct ReachFixpoint {
  std::vector<char> forcible;  // by node index
  std::vector<int> choice;     // settling control, -1 if never settled
  bool all;
};

ReachFixpoint reach_fixpoint(const RspGraph& g) {
  const int n = g.num_nodes();
  ReachFixpoint r;
  r.forcible.assign(n, 0);
  r.choice.assign(n, -1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> settled_now;
    for (int i = 0; i < n; ++i) {
      if (r.forcible[i]) continue;
      NodeId x(i + 1);
      for (int u = 0; u < g.num_controls(x); ++u) {
        const auto& succ = g.successors(x, u);
        bool inside = !succ.empty();
        for (const Successor& s : succ)
          if (!s.node.is_destination() && !r.forcible[s.node.index()]) {
            inside = false;
            break;
          }
        if (inside) {
          settled_now.push_back(i);
          r.choice[i] = u;
          break;
        }
      }
    }
    for (int i : settled_now) {
      r.forcible[i] = 1;
      changed = true;
    }
  }
  r.all = std::all_of(r.forcible.begin(), r.forcible.end(),
                      [](char c) { return c != 0; });
  return r;
}

}  // namespace

TerminationReachability proper_policy_exists(const RspGraph& g) {
  ReachFixpoint r = reach_fixpoint(g);
  return TerminationReachability{r.all, std::move(r.forcible)};
}

std::optional<Policy> canonical_proper_policy(const RspGraph& g) {
  ReachFixpoint r = reach_fixpoint(g);
  if (!r.all) return std::nullopt;
  return Policy(std::move(r.choice));
}

AugmentResult augment_termination(const RspGraph& g,
                                  std::optional<Rational> gbar) {
  const int n = g.num_nodes();
  Rational bar = gbar ? *gbar : Rational(g.max_length() * n + 1);

  // Uniform control name that collides with nothing in the instance.
  std::string name = "term";
  for (int suffix = 2;; ++suffix) {
    bool taken = false;
    for (int i = 1; i <= n && !taken; ++i)
      taken = g.control_index(NodeId(i), name).has_value();
    if (!taken) break;
    name = "term" + std::to_string(suffix);
  }

  AugmentResult out{g, name, bar};
  for (int i = 1; i <= n; ++i) {
    NodeId x(i);
    int u = out.graph.add_control(x, name);
    out.graph.add_arc(x, u, NodeId::destination(), bar);
  }
  return out;
}

RestrictionResult restrict_to_forcible(const RspGraph& g) {
  const int n = g.num_nodes();
  TerminationReachability reach = proper_policy_exists(g);

  RestrictionResult r;
  r.new_id.assign(n, 0);
  for (int i = 0; i < n; ++i)
    if (reach.forcible[i]) {
      r.kept.push_back(NodeId(i + 1));
      r.new_id[i] = static_cast<int>(r.kept.size());
    }

  r.graph = RspGraph(static_cast<int>(r.kept.size()));
  r.control_map.assign(n, {});
  for (int i = 0; i < n; ++i) {
    NodeId x(i + 1);
    r.control_map[i].assign(g.num_controls(x), -1);
    if (!reach.forcible[i]) continue;
    NodeId nx(r.new_id[i]);
    for (int u = 0; u < g.num_controls(x); ++u) {
      const auto& succ = g.successors(x, u);
      bool inside = true;
      for (const Successor& s : succ)
        if (!s.node.is_destination() && !reach.forcible[s.node.index()])
          inside = false;
      if (!inside) continue;
      int nu = r.graph.add_control(nx, g.control(x, u).name);
      r.control_map[i][u] = nu;
      for (const Successor& s : succ) {
        NodeId ny = s.node.is_destination() ? NodeId::destination()
                                            : NodeId(r.new_id[s.node.index()]);
        r.graph.add_arc(nx, nu, ny, s.length);
      }
    }
  }
  return r;
}

std::optional<Policy> restrict_policy(const RestrictionResult& r,
                                      const RspGraph& g, const Policy& mu) {
  std::vector<int> choice(r.graph.num_nodes(), -1);
  for (int i = 0; i < g.num_nodes(); ++i) {
    if (r.new_id[i] == 0) continue;
    int nu = r.control_map[i][mu.choice(NodeId(i + 1))];
    if (nu < 0) return std::nullopt;
    choice[r.new_id[i] - 1] = nu;
  }
  return Policy(std::move(choice));
}

std::string_view assumption_name(Assumption a) {
  switch (a) {
    case Assumption::kProperPositiveCycles:
      return "proper policy exists, improper cycles positive";
    case Assumption::kAllRegular:
      return "every policy regular";
    case Assumption::kSomeRegularIrregularPositive:
      return "some regular policy, irregular ones have a positive cycle";
    case Assumption::kProperNonnegativeCycles:
      return "proper policy exists, improper cycles nonnegative";
    case Assumption::kNonnegativeLengths:
      return "nonnegative lengths, proper policy exists, improper cycles positive";
  }
  return "?";
}

AssumptionReport check_assumption(const RspGraph& g, Assumption which,
                                  unsigned long long cap) {
  if (policy_count_capped(g, cap) > cap)
    throw EnumerationCapError("policy enumeration cap exceeded (" +
                              std::to_string(cap) + ")");

  AssumptionReport report;
  auto fail = [&](std::string detail, std::optional<Policy> witness) {
    report.holds = false;
    report.detail = std::move(detail);
    report.witness = std::move(witness);
  };

  if (which == Assumption::kNonnegativeLengths &&
      !g.all_lengths_nonnegative()) {
    fail("some arc length is negative", std::nullopt);
    return report;
  }

  bool any_proper = false;
  bool any_regular = false;
  Policy mu = Policy::uniform(g.num_nodes());
  do {
    PolicyClassification cls = classify_policy(g, mu);
    any_proper = any_proper || cls.proper;
    any_regular = any_regular || cls.regular;
    switch (which) {
      case Assumption::kProperPositiveCycles:
      case Assumption::kNonnegativeLengths:
        if (!cls.proper && !(cls.min_cycle_mean > Cost(0))) {
          fail("improper policy with a nonpositive cycle", mu);
          return report;
        }
        break;
      case Assumption::kAllRegular:
        if (!cls.regular) {
          fail("policy is not regular", mu);
          return report;
        }
        break;
      case Assumption::kSomeRegularIrregularPositive:
        if (!cls.regular && !(cls.max_cycle_mean > Cost(0))) {
          fail("irregular policy with no positive cycle", mu);
          return report;
        }
        break;
      case Assumption::kProperNonnegativeCycles:
        if (!cls.proper && cls.min_cycle_mean < Cost(0)) {
          fail("improper policy with a negative cycle", mu);
          return report;
        }
        break;
    }
  } while (advance_policy(g, mu));

  switch (which) {
    case Assumption::kProperPositiveCycles:
    case Assumption::kProperNonnegativeCycles:
    case Assumption::kNonnegativeLengths:
      if (!any_proper) fail("no proper policy", std::nullopt);
      break;
    case Assumption::kSomeRegularIrregularPositive:
      if (!any_regular) fail("no regular policy", std::nullopt);
      break;
    case Assumption::kAllRegular:
      break;
  }
  return report;
}

}  // namespace rsp
