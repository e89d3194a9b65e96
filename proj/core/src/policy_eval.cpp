// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/policy_eval.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "rsp/policy_analysis.hpp"

namespace rsp {

EvalResult eval_proper(const RspGraph& g, const Policy& mu) {
  PolicySubgraph sub = policy_subgraph(g, mu);
  const int n = sub.num_nodes();

  // Kahn order; leftovers mean a cycle, i.e. an improper policy.
  std::vector<int> indeg(n, 0);
  for (const auto& outs : sub.succ)
    for (int v : outs) ++indeg[v];
  std::deque<int> queue;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  std::vector<int> topo;
  topo.reserve(n);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    topo.push_back(u);
    for (int v : sub.succ[u])
      if (--indeg[v] == 0) queue.push_back(v);
  }
  if (static_cast<int>(topo.size()) != n)
    throw std::invalid_argument("eval_proper: policy is improper");

  // Sinks first: every successor value is ready when a node is processed.
  EvalResult out{CostVector(n), EvalResult::Method::kAcyclicLongestPath, 0};
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    NodeId x(*it + 1);
    out.cost.at(x) = eval_H(g, x, mu.choice(x), out.cost);
  }
  return out;
}

EvalResult eval_limsup(const RspGraph& g, const Policy& mu, int horizon) {
  const int n = g.num_nodes();
  if (horizon == 0) horizon = 4 * n;
  if (horizon < 2 * n)
    throw std::invalid_argument("eval_limsup: horizon below 2N");

  const Rational bound = g.max_abs_length() * n;  // simple-walk value bound

  // Rolling window of the last N+1 sweep vectors (enough for the result
  // window and for spotting periods up to N+1).
  std::deque<CostVector> window;
  CostVector v = CostVector::zero(n);
  window.push_back(v);

  EvalResult out{CostVector(n), EvalResult::Method::kLimsupWindow, horizon};
  int k = 0;
  for (k = 1; k <= horizon; ++k) {
    CostVector next = apply_Tmu(g, mu, v);
    for (int i = 1; i <= n; ++i) {
      Cost& c = next.at(i);
      if (c.is_finite() && Cost(bound) < c) c = Cost::infinity();  // sticky
    }
    // Exact early out: a repeated sweep vector makes the tail periodic, so
    // the limsup is the max over the repetition window.
    auto rep = std::find(window.begin(), window.end(), next);
    if (rep != window.end()) {
      CostVector result = next;
      for (auto it = rep; it != window.end(); ++it)
        for (int i = 1; i <= n; ++i)
          result.at(i) = max(result.at(i), it->at(i));
      out.cost = std::move(result);
      out.horizon_used = k;
      return out;
    }
    window.push_back(next);
    if (static_cast<int>(window.size()) > n + 1) window.pop_front();
    v = std::move(next);
  }
  out.horizon_used = horizon;

  for (int i = 1; i <= n; ++i) {
    Cost best = window.front().at(i);
    for (const CostVector& w : window) best = max(best, w.at(i));
    if (best.is_finite() && best < Cost(-bound))
      best = Cost::minus_infinity();  // no terminating path in sight
    out.cost.at(i) = best;
  }
  return out;
}

bool verify_bellman(const RspGraph& g, const Policy& mu, const CostVector& J,
                    const std::optional<Rational>& tol) {
  CostVector t = apply_Tmu(g, mu, J);
  return tol ? J.within(t, *tol) : J == t;
}

}  // namespace rsp
