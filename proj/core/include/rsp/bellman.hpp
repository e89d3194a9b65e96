// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rsp/cost.hpp"
#include "rsp/graph.hpp"

namespace rsp {

/// Worst case of playing u at x against J:
///   H(x,u,J) = max over y in Y(x,u) of  g(x,u,y) + J~(y).
/// Throws std::invalid_argument on an empty successor set.
Cost eval_H(const RspGraph& g, NodeId x, int u, const CostVector& J);

/// One sweep of the policy operator: (Tmu J)(x) = H(x, mu(x), J).
CostVector apply_Tmu(const RspGraph& g, const Policy& mu, const CostVector& J);

/// One sweep of the optimal operator: (T J)(x) = min over u of H(x,u,J).
CostVector apply_T(const RspGraph& g, const CostVector& J);

/// Greedy (one-step-lookahead) policy at J; ties go to the lowest control
/// index, i.e. declaration order.
Policy greedy_policy(const RspGraph& g, const CostVector& J);

/// apply_T and greedy_policy in one pass.
struct GreedyResult {
  CostVector values;
  Policy policy;
};

GreedyResult greedy_with_values(const RspGraph& g, const CostVector& J);

}  // namespace rsp
