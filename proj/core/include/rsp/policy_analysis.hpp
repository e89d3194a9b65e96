// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsp/cost.hpp"
#include "rsp/graph.hpp"

namespace rsp {

/// The subgraph A_mu induced by a policy: all arcs (x,y) with y in
/// Y(x,mu(x)).  Arcs into the destination are kept separately; the implicit
/// destination self-loop is not materialized.
struct PolicySubgraph {
  std::vector<std::vector<int>> succ;  // succ[i]: ordinary successors (0-based) of node i+1
  std::vector<char> to_destination;    // node i+1 has an arc into t

  int num_nodes() const { return static_cast<int>(succ.size()); }
};

PolicySubgraph policy_subgraph(const RspGraph& g, const Policy& mu);

/// A policy is proper iff A_mu restricted to the ordinary nodes is acyclic:
/// the opponent can then never avoid the destination forever.
bool is_proper(const PolicySubgraph& sub);

/// Minimum and maximum cycle mean over the directed cycles of A_mu.
/// An acyclic subgraph reports (min=+inf, max=-inf).  Cycle mean and cycle
/// length share sign, so these decide "all cycles positive/negative/..."
/// questions exactly.
struct CycleExtremes {
  Cost min_mean = Cost::infinity();
  Cost max_mean = Cost::minus_infinity();
  bool has_cycle() const { return min_mean.is_finite(); }
};

CycleExtremes cycle_extremes(const PolicySubgraph& sub, const RspGraph& g,
                             const Policy& mu);

/// True iff the destination is reachable from every ordinary node in A_mu.
bool destination_connected(const PolicySubgraph& sub);

struct PolicyClassification {
  bool proper = false;
  bool destination_connected = false;
  Cost min_cycle_mean = Cost::infinity();        // +inf when A_mu is acyclic
  Cost max_cycle_mean = Cost::minus_infinity();  // -inf when A_mu is acyclic
  /// Proper, or destination-connected with every cycle strictly negative.
  /// Exactly the policies whose worst-case cost is finite everywhere and
  /// well-behaved under value iteration.
  bool regular = false;
};

PolicyClassification classify_policy(const RspGraph& g, const Policy& mu);

/// Nodes from which termination can be forced regardless of the opponent:
/// the least fixpoint of  N_0 = {t},  N_{k+1} = N_k + {x | exists u with
/// Y(x,u) inside N_k}.  A proper policy exists iff every node qualifies.
struct TerminationReachability {
  bool all = false;
  std::vector<char> forcible;  // by node index
};

TerminationReachability proper_policy_exists(const RspGraph& g);

/// The deterministic proper policy read off the reachability fixpoint: each
/// node picks its lowest-index control whose successor set lies in the region
/// settled before it.  Empty iff no proper policy exists.
std::optional<Policy> canonical_proper_policy(const RspGraph& g);

/// Adds a fresh termination control (Y = {t}, length gbar) at every ordinary
/// node.  The augmented instance always has a proper policy; optimal costs at
/// nodes that already had some proper-policy cost below gbar are unchanged.
struct AugmentResult {
  RspGraph graph;
  std::string control_name;
  Rational gbar;
};

/// Default gbar: N * (max arc length) + 1, strictly above any proper-policy
/// cost of the original instance.
AugmentResult augment_termination(const RspGraph& g,
                                  std::optional<Rational> gbar = std::nullopt);

/// Restriction to the termination-forcible region (nodes renumbered 1..M in
/// increasing original order; only controls whose successor sets stay inside
/// survive).  Every kept node retains at least one control, so the result is
/// valid and has a proper policy.
struct RestrictionResult {
  RspGraph graph;
  std::vector<NodeId> kept;                    // new index -> original id
  std::vector<int> new_id;                     // original index -> new id, 0 if dropped
  std::vector<std::vector<int>> control_map;   // original (node,control) -> new control or -1
};

RestrictionResult restrict_to_forcible(const RspGraph& g);

/// Carries a policy over to a restricted graph; empty if some kept node's
/// choice was dropped by the restriction.
std::optional<Policy> restrict_policy(const RestrictionResult& r,
                                      const RspGraph& g, const Policy& mu);

/// Working regimes checked by generators and the bench harness.
enum class Assumption {
  /// A proper policy exists and every improper policy's cycles are all
  /// strictly positive (the strong regime: VI, PI and their asynchronous
  /// variants all converge exactly).
  kProperPositiveCycles,
  /// Every policy is proper or destination-connected with all-negative
  /// cycles, i.e. every policy is regular.
  kAllRegular,
  /// At least one regular policy, and every irregular policy has some
  /// strictly positive cycle.
  kSomeRegularIrregularPositive,
  /// A proper policy exists and improper-policy cycles are all nonnegative
  /// (zero-length cycles allowed; the perturbation solver's home turf).
  kProperNonnegativeCycles,
  /// kProperPositiveCycles plus every arc length nonnegative (label setting
  /// applies).
  kNonnegativeLengths,
};

std::string_view assumption_name(Assumption a);

struct AssumptionReport {
  bool holds = true;
  std::string detail;              // reason on failure
  std::optional<Policy> witness;   // a violating policy, when one exists
};

/// Exhaustive check by policy enumeration (desk-scale instances only).
/// Throws EnumerationCapError if there are more than `cap` policies.
AssumptionReport check_assumption(const RspGraph& g, Assumption which,
                                  unsigned long long cap = 1000000);

}  // namespace rsp
