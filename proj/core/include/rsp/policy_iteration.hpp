// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rsp/bellman.hpp"
#include "rsp/cost.hpp"
#include "rsp/graph.hpp"
#include "rsp/schedule.hpp"

namespace rsp {

struct PiTrace {
  std::vector<Policy> policies;    // mu_0, mu_1, ...
  std::vector<CostVector> costs;   // J_{mu_0}, J_{mu_1}, ...
  int iterations = 0;
};

struct PiResult {
  CostVector cost;
  Policy policy;
  PiTrace trace;
};

/// Synchronous policy iteration over proper policies: evaluate mu_k exactly,
/// stop when J_{mu_k} = T J_{mu_k} (the sound optimality certificate —
/// policy repetition is not used), otherwise improve greedily.
///
/// Throws std::invalid_argument if mu0 is improper and
/// AssumptionViolationError if an improvement step produces an improper
/// policy or a cost increase — both certify the strong regime fails.
PiResult pi_proper(const RspGraph& g, const Policy& mu0,
                   long long max_iterations = 1000000);

/// State of asynchronous optimistic policy iteration: besides the working
/// costs J and policy mu there is a threshold vector V; updates evaluate
/// against min(V, J) componentwise, which is what keeps interleaved
/// improve/evaluate events from cycling or diverging.
struct AsyncPiState {
  CostVector J;
  CostVector V;
  Policy mu;
  std::vector<std::vector<NodeId>> partition;  // informational

  /// Safe defaults: V = J = (N*max g + 1) * ones — strictly above every
  /// proper-policy cost — mu lexicographically first, singleton partition.
  static AsyncPiState defaults(const RspGraph& g);
};

struct AsyncPiOptions {
  long long max_events = 1000000;
  /// Test-only ablation: when false the threshold V is ignored and updates
  /// use J directly — the textbook form that can oscillate or diverge under
  /// asynchronous schedules.
  bool use_threshold = true;
};

struct AsyncPiResult {
  AsyncPiState state;
  bool converged = false;
  long long events = 0;
};

/// Replays the schedule cyclically.  Improve events at x set
/// J(x) = V(x) = min_u H(x,u,min(V,J)) and record the argmin in mu;
/// evaluate events set J(x) = H(x,mu(x),min(V,J)) leaving V and mu alone.
/// Terminates when a full fairness window changes nothing, at which point
/// J = V = TJ holds (checked).  Throws std::invalid_argument for unfair
/// schedules.
AsyncPiResult pi_async(const RspGraph& g, AsyncPiState init,
                       const Schedule& schedule,
                       const AsyncPiOptions& opts = {});

}  // namespace rsp
