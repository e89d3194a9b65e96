// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "rsp/cost.hpp"
#include "rsp/graph.hpp"
#include "rsp/policy_analysis.hpp"

namespace rsp {

inline constexpr unsigned long long kDefaultPolicyCap = 1000000;

/// All policies in lexicographic order.  Throws EnumerationCapError when the
/// instance has more than `cap` policies.
std::vector<Policy> enumerate_policies(const RspGraph& g,
                                       unsigned long long cap = kDefaultPolicyCap);

struct PolicyRecord {
  Policy policy;
  PolicyClassification cls;
  CostVector cost;  // eval_proper for proper policies, eval_limsup otherwise
};

struct OracleResult {
  std::vector<PolicyRecord> per_policy;  // lexicographic order

  /// Componentwise min over every policy (the unrestricted minimax value;
  /// may be attained only by improper policies).
  CostVector j_star_minimax;

  /// Componentwise min over proper policies; empty when none exists.
  std::optional<CostVector> j_hat;

  /// Lexicographically first proper policy whose cost equals j_hat at every
  /// node, when one exists.  `simultaneous` records whether it does; under
  /// the strong working regimes it always should, and test suites treat a
  /// false here as a hard failure.
  std::optional<Policy> optimal_proper;
  bool simultaneous = false;
};

/// Ground truth by exhaustive enumeration.  horizon is passed through to
/// eval_limsup for improper policies (0 = its default); callers that need
/// exact +/-inf detection for slowly pumping cycles must raise it.
OracleResult brute_force(const RspGraph& g, int horizon = 0,
                         unsigned long long cap = kDefaultPolicyCap);

}  // namespace rsp
