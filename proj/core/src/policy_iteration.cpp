// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/policy_iteration.hpp"

#include <stdexcept>

#include "rsp/errors.hpp"
#include "rsp/policy_analysis.hpp"
#include "rsp/policy_eval.hpp"

namespace rsp {

PiResult pi_proper(const RspGraph& g, const Policy& mu0,
                   long long max_iterations) {
  if (!is_proper(policy_subgraph(g, mu0)))
    throw std::invalid_argument("pi_proper: initial policy is improper");

  PiResult r;
  Policy mu = mu0;
  for (long long k = 0; k < max_iterations; ++k) {
    CostVector j = eval_proper(g, mu).cost;
    if (!r.trace.costs.empty() && !componentwise_le(j, r.trace.costs.back()))
      throw AssumptionViolationError(
          "policy iteration: cost increased across an improvement step");
    r.trace.policies.push_back(mu);
    r.trace.costs.push_back(j);
    r.trace.iterations = static_cast<int>(k) + 1;

    GreedyResult greedy = greedy_with_values(g, j);
    if (greedy.values == j) {
      r.cost = std::move(j);
      r.policy = std::move(mu);
      return r;
    }
    if (!is_proper(policy_subgraph(g, greedy.policy)))
      throw AssumptionViolationError(
          "policy iteration: improvement produced an improper policy");
    mu = std::move(greedy.policy);
  }
  throw AssumptionViolationError(
      "policy iteration: no optimality certificate within iteration cap");
}

AsyncPiState AsyncPiState::defaults(const RspGraph& g) {
  const int n = g.num_nodes();
  AsyncPiState s;
  Cost bar = Cost(Rational(g.max_length() * n + 1));
  s.J = CostVector::constant(n, bar);
  s.V = s.J;
  s.mu = Policy::uniform(n);
  for (int i = 1; i <= n; ++i) s.partition.push_back({NodeId(i)});
  return s;
}

AsyncPiResult pi_async(const RspGraph& g, AsyncPiState init,
                       const Schedule& schedule, const AsyncPiOptions& opts) {
  const int n = g.num_nodes();
  const int window = schedule.fairness_window(n);
  if (window == 0)
    throw std::invalid_argument("pi_async: schedule is not fair");

  AsyncPiResult r;
  r.state = std::move(init);
  if (n == 0 || schedule.size() == 0) {
    r.converged = true;
    return r;
  }
  CostVector& J = r.state.J;
  CostVector& V = r.state.V;
  Policy& mu = r.state.mu;

  // Evaluation argument: min(V,J) with the threshold, J without.
  auto arg = [&]() {
    if (!opts.use_threshold) return J;
    CostVector m(n);
    for (int i = 1; i <= n; ++i) m.at(i) = min(V.at(i), J.at(i));
    return m;
  };

  long long quiet = 0;
  const auto& evs = schedule.events();
  while (r.events < opts.max_events) {
    const ScheduleEvent& e = evs[r.events % evs.size()];
    ++r.events;
    bool changed = false;
    CostVector m = arg();
    for (NodeId x : e.nodes) {
      if (e.phase == Phase::kImprove) {
        Cost best = eval_H(g, x, 0, m);
        int best_u = 0;
        for (int u = 1; u < g.num_controls(x); ++u) {
          Cost c = eval_H(g, x, u, m);
          if (c < best) {
            best = c;
            best_u = u;
          }
        }
        if (J.at(x) != best || (opts.use_threshold && V.at(x) != best) ||
            mu.choice(x) != best_u)
          changed = true;
        J.at(x) = best;
        if (opts.use_threshold) V.at(x) = best;
        mu.set_choice(x, best_u);
      } else {
        Cost c = eval_H(g, x, mu.choice(x), m);
        if (J.at(x) != c) changed = true;
        J.at(x) = c;
      }
    }
    quiet = changed ? 0 : quiet + 1;
    if (quiet >= window) {
      r.converged = true;
      break;
    }
  }

  if (r.converged) {
    // A quiet fairness window forces J = TJ (and J = V with the threshold);
    // anything else is a logic error, not an input condition.
    if (apply_T(g, J) != J)
      throw std::logic_error("pi_async: settled state is not a fixpoint");
    if (opts.use_threshold && J != V)
      throw std::logic_error("pi_async: settled state has J != V");
  }
  return r;
}

}  // namespace rsp
