// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/rollout.hpp"

#include <stdexcept>

#include "rsp/bellman.hpp"
#include "rsp/policy_analysis.hpp"
#include "rsp/policy_eval.hpp"

namespace rsp {

RolloutPlan rollout_policy(const RspGraph& g, const Policy& base) {
  if (!is_proper(policy_subgraph(g, base))) {
    throw std::invalid_argument("rollout: base policy must be terminating");
  }
  RolloutPlan plan;
  plan.base = base;
  plan.base_cost = eval_proper(g, base).cost;
  plan.improved = greedy_policy(g, plan.base_cost);
  return plan;
}

int rollout_control(const RspGraph& g, const RolloutPlan& plan, NodeId x) {
  int best_u = 0;
  Cost best = eval_H(g, x, 0, plan.base_cost);
  for (int u = 1; u < g.num_controls(x); ++u) {
    const Cost h = eval_H(g, x, u, plan.base_cost);
    if (h < best) {
      best = h;
      best_u = u;
    }
  }
  return best_u;
}

}  // namespace rsp
