// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "rsp/bellman.hpp"
#include "rsp/cost.hpp"
#include "rsp/graph.hpp"

namespace rsp {

struct EvalResult {
  CostVector cost;
  enum class Method { kAcyclicLongestPath, kLimsupWindow } method;
  /// Sweeps actually performed (0 for the acyclic method; may stop short of
  /// the requested horizon when the iteration provably entered a cycle).
  int horizon_used = 0;
};

/// Exact worst-case cost of a proper policy: a longest-path pass over the
/// acyclic subgraph A_mu in reverse topological order.  Throws
/// std::invalid_argument if mu is improper.
EvalResult eval_proper(const RspGraph& g, const Policy& mu);

/// Worst-case cost of an arbitrary policy via the limsup of repeated policy
/// sweeps from the zero function.
///
/// Sweep values are clamped against the divergence bound B = N * max|g|: a
/// value strictly above B proves the opponent is pumping a positive cycle
/// (any walk value above the simple-walk bound contains one), so that node is
/// +inf and stays +inf.  Symmetrically, a node whose whole result window
/// stays strictly below -B has no terminating path left and reports -inf.
/// Otherwise the result is the max over the last N+1 sweeps, which covers the
/// eventual periodicity introduced by cycles of length <= N.
///
/// horizon = 0 picks the default 4N; values below 2N are rejected.  The
/// window heuristic is exact whenever the sweep sequence repeats within the
/// horizon (always, on desk-scale instances given a large enough horizon);
/// callers that need guarantees for slowly pumping cycles should raise it.
EvalResult eval_limsup(const RspGraph& g, const Policy& mu, int horizon = 0);

/// Checks J == Tmu J, exactly, or within sup-norm `tol` when given.
bool verify_bellman(const RspGraph& g, const Policy& mu, const CostVector& J,
                    const std::optional<Rational>& tol = std::nullopt);

}  // namespace rsp
