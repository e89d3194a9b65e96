// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "rsp/bellman.hpp"
#include "rsp/cost.hpp"
#include "rsp/graph.hpp"
#include "rsp/schedule.hpp"

namespace rsp {

struct ViTrace {
  std::vector<CostVector> iterates;             // J_0, J_1, ...
  int sweeps = 0;                               // sweeps (or events) performed
  bool converged = false;
  /// Termination layers of the final greedy policy when it is proper:
  /// X_0 = {t}, then the nodes whose successor set fell inside the settled
  /// region at each pass.
  std::vector<std::vector<NodeId>> layer_sets;
};

struct ViResult {
  CostVector cost;
  Policy policy;  // greedy at the final values, lowest-index ties
  ViTrace trace;
};

/// Value iteration from J = +inf, the initialization with a finite
/// termination guarantee: the iterates settle exactly within N sweeps, layer
/// by layer.  Throws AssumptionViolationError if they do not — that many
/// sweeps without a fixpoint certifies the working assumptions fail (e.g. an
/// improper policy with a negative cycle keeps pulling values down).
ViResult vi_from_infinity(const RspGraph& g);

struct ViOptions {
  /// Exact mode (no tol): stop when a sweep changes nothing.  Tolerance
  /// mode: stop when two consecutive sweeps move by at most tol in sup-norm.
  std::optional<Rational> tol;
  int max_sweeps = 100000;
};

/// Plain value iteration from an arbitrary start.  Never throws on
/// non-convergence; inspect trace.converged.
ViResult vi(const RspGraph& g, CostVector j0, const ViOptions& opts = {});

struct AsyncViOptions {
  long long max_events = 1000000;
};

/// Asynchronous value iteration: replays the schedule cyclically, each
/// improve event applying single-node optimal updates in place (evaluate
/// events are ignored).  Stops once a full fairness window passes without any
/// change — every node was then re-improved against the same values, i.e.
/// J = TJ.  Throws std::invalid_argument for unfair schedules.
ViResult vi_async(const RspGraph& g, CostVector j0, const Schedule& schedule,
                  const AsyncViOptions& opts = {});

/// Layer decomposition of a policy: X_0 = {t}, X_{k+1} = the unsettled nodes
/// whose successors under mu all lie in earlier layers.  Covers every node
/// iff mu is proper (partial layers are returned otherwise).
std::vector<std::vector<NodeId>> termination_layers(const RspGraph& g,
                                                    const Policy& mu);

}  // namespace rsp
