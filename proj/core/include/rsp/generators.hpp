// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsp/graph.hpp"
#include "rsp/policy_analysis.hpp"

namespace rsp {

/// Regime a generated instance must satisfy (verified by exhaustive
/// check_assumption, with rejection sampling — desk-scale sizes only).
enum class GenTarget {
  kNone,
  kProperPositiveCycles,     // the strong regime
  kProperNonnegativeCycles,  // zero-length cycles allowed
  kNonnegativeLengths,       // strong regime + lengths >= 0 (label setting)
};

struct GenSpec {
  std::uint64_t seed = 0;
  int n_nodes = 4;
  int max_controls = 3;
  int max_branch = 3;       // successors per control
  long length_min = -3;
  long length_max = 9;
  GenTarget target = GenTarget::kNone;
  /// Additionally insist on at least one non-terminating policy whose best
  /// cycle has mean exactly zero (the perturbation solver's hard case).
  bool require_zero_cycle = false;
  int max_attempts = 1000;
};

/// Random instance, reproducible from the seed.  Rejection-samples until the
/// target regime (and the zero-cycle demand, if set) holds; throws
/// std::runtime_error when max_attempts is exhausted.
RspGraph gen_random(const GenSpec& spec);

/// Search problems: at every site the searcher may stop (pay the site's
/// nonnegative stop cost, done) or keep moving along adversarial continue
/// controls with nonnegative move costs.  Stopping everywhere terminates, so
/// the nonnegative-cycle regime holds by construction; with zero move costs
/// the never-stop policies are exactly the zero-mean-cycle offenders.
struct SearchSpec {
  std::uint64_t seed = 0;
  int n_nodes = 4;
  long stop_cost_min = 0;
  long stop_cost_max = 5;
  long move_cost_min = 0;
  long move_cost_max = 0;
  int max_continue = 2;  // continue controls per node, 0..max_continue
  int max_branch = 3;    // successors per continue control
};

RspGraph gen_search(const SearchSpec& spec);

/// Pursuit on a rectangular grid.  The state is the pair (pursuer cell,
/// evader cell); the pursuer commits a move first and the evader, seeing it,
/// answers with any of its own moves.  Every move round costs 1.  Moving onto
/// the evader's cell captures immediately (the evader cannot slip through a
/// swap); coincident positions offer a free capture control into the
/// destination.
struct PursuitSpec {
  int width = 2;
  int height = 2;
  std::vector<std::pair<int, int>> obstacles;  // (row, col) cells removed
};

struct PursuitResult {
  RspGraph graph;
  /// Chase heuristic: move to shrink the all-pairs grid distance to the
  /// evader's current cell, as if the evader stood still.
  Policy base;
  /// States from which capture cannot be forced against best evasion; the
  /// base policy can only terminate when this is empty.
  std::vector<NodeId> non_forcible;
  std::vector<std::string> state_names;  // by node index
};

/// Throws std::invalid_argument when the free cells are empty or
/// disconnected.
PursuitResult gen_pursuit(const PursuitSpec& spec);

}  // namespace rsp
