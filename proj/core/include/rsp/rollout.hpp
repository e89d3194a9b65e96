// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rsp/cost.hpp"
#include "rsp/graph.hpp"

namespace rsp {

/// One policy-improvement step on top of a terminating base heuristic: the
/// base policy is priced once, and the improved policy is greedy against
/// that price.  The improved policy costs no more than the base at every
/// node.
struct RolloutPlan {
  Policy base;
  CostVector base_cost;
  Policy improved;
};

/// Prices `base` (throws std::invalid_argument if it can fail to terminate)
/// and computes the improved policy offline.
RolloutPlan rollout_policy(const RspGraph& g, const Policy& base);

/// The control the online one-step lookahead picks at `x`: arg min over u of
/// the worst-case "arc length plus cached base price of where you land",
/// lowest index on ties.  Agrees with plan.improved everywhere.
int rollout_control(const RspGraph& g, const RolloutPlan& plan, NodeId x);

}  // namespace rsp
