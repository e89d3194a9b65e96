// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/value_iteration.hpp"

#include <stdexcept>

#include "rsp/errors.hpp"
#include "rsp/policy_analysis.hpp"

namespace rsp {

std::vector<std::vector<NodeId>> termination_layers(const RspGraph& g,
                                                    const Policy& mu) {
  const int n = g.num_nodes();
  std::vector<std::vector<NodeId>> layers{{NodeId::destination()}};
  std::vector<char> settled(n, 0);
  for (;;) {
    std::vector<NodeId> layer;
    for (int i = 0; i < n; ++i) {
      if (settled[i]) continue;
      NodeId x(i + 1);
      bool inside = true;
      for (const Successor& s : g.successors(x, mu.choice(x)))
        if (!s.node.is_destination() && !settled[s.node.index()]) {
          inside = false;
          break;
        }
      if (inside) layer.push_back(x);
    }
    if (layer.empty()) break;
    for (NodeId x : layer) settled[x.index()] = 1;
    layers.push_back(std::move(layer));
  }
  return layers;
}

namespace {

void attach_layers(const RspGraph& g, ViResult& r) {
  if (is_proper(policy_subgraph(g, r.policy)))
    r.trace.layer_sets = termination_layers(g, r.policy);
}

}  // namespace

ViResult vi_from_infinity(const RspGraph& g) {
  const int n = g.num_nodes();
  ViResult r;
  CostVector j = CostVector::infinite(n);
  r.trace.iterates.push_back(j);

  // A fixpoint must appear within N sweeps; one extra sweep verifies it.
  for (int sweep = 1; sweep <= n + 1; ++sweep) {
    CostVector next = apply_T(g, j);
    r.trace.iterates.push_back(next);
    if (next == j) {
      r.trace.sweeps = sweep - 1;
      r.trace.converged = true;
      r.cost = std::move(j);
      r.policy = greedy_policy(g, r.cost);
      attach_layers(g, r);
      return r;
    }
    j = std::move(next);
    r.trace.sweeps = sweep;
  }
  throw AssumptionViolationError(
      "value iteration from +inf: no convergence within " +
      std::to_string(n + 1) + " sweeps");
}

ViResult vi(const RspGraph& g, CostVector j0, const ViOptions& opts) {
  ViResult r;
  CostVector j = std::move(j0);
  r.trace.iterates.push_back(j);

  int close_streak = 0;
  for (int sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
    CostVector next = apply_T(g, j);
    r.trace.iterates.push_back(next);
    r.trace.sweeps = sweep;
    bool done;
    if (opts.tol) {
      close_streak = next.within(j, *opts.tol) ? close_streak + 1 : 0;
      done = close_streak >= 2;
    } else {
      done = next == j;
    }
    j = std::move(next);
    if (done) {
      r.trace.converged = true;
      break;
    }
  }
  r.cost = std::move(j);
  r.policy = greedy_policy(g, r.cost);
  if (r.trace.converged) attach_layers(g, r);
  return r;
}

ViResult vi_async(const RspGraph& g, CostVector j0, const Schedule& schedule,
                  const AsyncViOptions& opts) {
  const int n = g.num_nodes();
  const int window = schedule.fairness_window(n);
  if (window == 0)
    throw std::invalid_argument("vi_async: schedule is not fair");

  ViResult r;
  CostVector j = std::move(j0);
  r.trace.iterates.push_back(j);
  if (n == 0 || schedule.size() == 0) {
    r.trace.converged = true;
    r.cost = std::move(j);
    return r;
  }

  long long quiet = 0;  // consecutive events without a change
  long long events = 0;
  const auto& evs = schedule.events();
  while (events < opts.max_events) {
    const ScheduleEvent& e = evs[events % evs.size()];
    ++events;
    bool changed = false;
    if (e.phase == Phase::kImprove) {
      for (NodeId x : e.nodes) {
        Cost best = eval_H(g, x, 0, j);
        for (int u = 1; u < g.num_controls(x); ++u)
          best = min(best, eval_H(g, x, u, j));
        if (j.at(x) != best) {
          j.at(x) = best;
          changed = true;
        }
      }
    }
    quiet = changed ? 0 : quiet + 1;
    if (quiet >= window) {
      // Every node got improved against unchanged values: J = TJ.
      r.trace.converged = true;
      break;
    }
  }
  r.trace.sweeps = static_cast<int>(events);
  r.cost = std::move(j);
  r.trace.iterates.push_back(r.cost);
  r.policy = greedy_policy(g, r.cost);
  if (r.trace.converged) attach_layers(g, r);
  return r;
}

}  // namespace rsp
