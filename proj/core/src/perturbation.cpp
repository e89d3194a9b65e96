// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/perturbation.hpp"

#include <utility>

#include "rsp/dijkstra.hpp"
#include "rsp/errors.hpp"
#include "rsp/policy_eval.hpp"
#include "rsp/value_iteration.hpp"

namespace rsp {

RspGraph perturb_graph(const RspGraph& g, const Rational& delta) {
  RspGraph out(g.num_nodes());
  for (int i = 1; i <= g.num_nodes(); ++i) {
    const NodeId x(i);
    for (int u = 0; u < g.num_controls(x); ++u) {
      out.add_control(x, g.control(x, u).name);
      for (const Successor& s : g.successors(x, u)) {
        out.add_arc(x, u, s.node, s.length + delta);
      }
    }
  }
  return out;
}

PerturbationResult solve_by_perturbation(const RspGraph& g,
                                         const PerturbationOptions& opts) {
  PerturbationResult result;
  Rational delta = opts.delta0;
  bool stabilized = false;
  for (int round = 0; round < opts.max_rounds; ++round) {
    const RspGraph gp = perturb_graph(g, delta);
    PerturbationRound rec;
    rec.delta = delta;
    if (opts.use_dijkstra) {
      DijkstraResult inner = dijkstra_run(gp);
      rec.perturbed_cost = std::move(inner.cost);
      rec.policy = std::move(inner.policy);
    } else {
      ViResult inner = vi_from_infinity(gp);
      rec.perturbed_cost = std::move(inner.cost);
      rec.policy = std::move(inner.policy);
    }
    result.rounds.push_back(std::move(rec));
    const std::size_t k = result.rounds.size();
    if (k >= 2 && result.rounds[k - 1].policy == result.rounds[k - 2].policy) {
      stabilized = true;
      break;
    }
    delta *= opts.shrink;
  }
  if (!stabilized) {
    throw AssumptionViolationError(
        "perturbation: inner policy did not stabilize; the instance likely "
        "violates the nonnegative-cycle requirement");
  }
  result.policy = result.rounds.back().policy;
  result.cost = eval_proper(g, result.policy).cost;
  return result;
}

}  // namespace rsp
