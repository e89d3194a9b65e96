// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rsp/cost.hpp"
#include "rsp/graph.hpp"

namespace rsp {

/// Copy of `g` with `delta` added to every arc length.  With delta > 0 any
/// nonnegative-mean cycle becomes positive-mean, so the strong solvers apply
/// to the perturbed problem.
RspGraph perturb_graph(const RspGraph& g, const Rational& delta);

struct PerturbationOptions {
  Rational delta0{1};     // first perturbation size
  Rational shrink{1, 4};  // geometric factor between rounds
  int max_rounds = 20;
  bool use_dijkstra = false;  // inner solver (requires nonnegative lengths)
};

struct PerturbationRound {
  Rational delta;
  CostVector perturbed_cost;  // value of the perturbed problem
  Policy policy;              // optimal (terminating) policy found for it
};

struct PerturbationResult {
  CostVector cost;    // chosen policy evaluated on the *unperturbed* graph
  Policy policy;
  std::vector<PerturbationRound> rounds;
};

/// Solves problems whose terminating policies may be optimal only in the
/// limit (zero-mean cycles allowed for the others): solve the delta-inflated
/// problem exactly, shrink delta until the inner policy repeats, then price
/// that policy on the original lengths.  Throws AssumptionViolationError if
/// the policy never stabilizes within max_rounds.
PerturbationResult solve_by_perturbation(const RspGraph& g,
                                         const PerturbationOptions& opts = {});

}  // namespace rsp
