// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "rsp/types.hpp"

namespace rsp {

/// Asynchronous solvers replay a finite event list cyclically.  Each event
/// names the nodes it touches and a phase; value iteration uses improve
/// events only (evaluate events are no-ops there), optimistic policy
/// iteration uses both.
enum class Phase { kImprove, kEvaluate };

struct ScheduleEvent {
  std::vector<NodeId> nodes;
  Phase phase = Phase::kImprove;
};

class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<ScheduleEvent> events)
      : events_(std::move(events)) {}

  const std::vector<ScheduleEvent>& events() const { return events_; }
  int size() const { return static_cast<int>(events_.size()); }

  /// Fairness window: the smallest W such that under cyclic replay every
  /// window of W consecutive events improves every node at least once.
  /// Returns 0 when some node is never improved (an unfair schedule).
  int fairness_window(int num_nodes) const;
  bool is_fair(int num_nodes) const { return fairness_window(num_nodes) > 0; }

  /// One improve event covering all nodes (classic synchronous sweeps).
  static Schedule synchronous(int n);
  /// Single-node improve events 1..n in order (Gauss-Seidel sweeps).
  static Schedule round_robin(int n);
  /// Seeded fair schedule: `blocks` shuffled improve-permutations of all
  /// nodes, with single-node evaluate events mixed in at roughly
  /// evaluate_percent per slot.
  static Schedule random_fair(int n, std::uint64_t seed, int blocks = 4,
                              int evaluate_percent = 50);
  /// Like random_fair, but improve/evaluate events act on the given node
  /// blocks instead of single nodes (every block appears in every round).
  static Schedule random_fair_blocks(const std::vector<std::vector<NodeId>>& partition,
                                     std::uint64_t seed, int rounds = 4,
                                     int evaluate_percent = 50);

 private:
  std::vector<ScheduleEvent> events_;
};

}  // namespace rsp
