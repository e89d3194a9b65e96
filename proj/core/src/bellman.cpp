// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/bellman.hpp"

#include <stdexcept>

namespace rsp {

Cost eval_H(const RspGraph& g, NodeId x, int u, const CostVector& J) {
  const auto& succ = g.successors(x, u);
  if (succ.empty())
    throw std::invalid_argument("H undefined: empty successor set");
  Cost worst = Cost(succ.front().length) + J.tilde(succ.front().node);
  for (std::size_t i = 1; i < succ.size(); ++i) {
    Cost c = Cost(succ[i].length) + J.tilde(succ[i].node);
    if (worst < c) worst = c;
  }
  return worst;
}

CostVector apply_Tmu(const RspGraph& g, const Policy& mu, const CostVector& J) {
  CostVector out(g.num_nodes());
  for (int i = 1; i <= g.num_nodes(); ++i) {
    NodeId x(i);
    out.at(x) = eval_H(g, x, mu.choice(x), J);
  }
  return out;
}

CostVector apply_T(const RspGraph& g, const CostVector& J) {
  return greedy_with_values(g, J).values;
}

Policy greedy_policy(const RspGraph& g, const CostVector& J) {
  return greedy_with_values(g, J).policy;
}

GreedyResult greedy_with_values(const RspGraph& g, const CostVector& J) {
  const int n = g.num_nodes();
  GreedyResult out{CostVector(n), Policy::uniform(n)};
  for (int i = 1; i <= n; ++i) {
    NodeId x(i);
    Cost best = eval_H(g, x, 0, J);
    int best_u = 0;
    for (int u = 1; u < g.num_controls(x); ++u) {
      Cost c = eval_H(g, x, u, J);
      if (c < best) {  // strict: ties keep the lowest index
        best = c;
        best_u = u;
      }
    }
    out.values.at(x) = best;
    out.policy.set_choice(x, best_u);
  }
  return out;
}

}  // namespace rsp
