// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <utility>
#include <vector>

#include "rsp/cost.hpp"
#include "rsp/graph.hpp"

namespace rsp {

/// Label-setting state.  V (the candidate set) is an ordered heap keyed by
/// (label, node id) — the destination's id 0 puts it first among ties, and
/// ties otherwise go to the lowest node id.  W is the permanent set.
struct LabelState {
  CostVector labels;                        // over ordinary nodes; +inf until labeled
  std::vector<char> permanent;              // by node index
  bool destination_permanent = false;
  std::set<std::pair<Rational, int>> queue; // candidate set V
  std::vector<NodeId> entry_order;          // nodes in order of entry into W
  std::vector<Cost> entry_labels;           // their labels at entry
  int iterations = 0;

  bool in_permanent(NodeId x) const {
    return x.is_destination() ? destination_permanent : permanent[x.index()] != 0;
  }
  bool exhausted() const { return queue.empty(); }
};

/// V = {t} with label 0, everything else unlabeled.  Requires nonnegative
/// arc lengths (throws std::invalid_argument otherwise).
LabelState dijkstra_init(const RspGraph& g);

/// One round: removes the least-label candidate y*, makes it permanent, then
/// offers every non-permanent x the controls whose successor sets are
/// entirely permanent and contain y*; x's label drops to the best worst-case
/// value among those if that improves it.  Returns y*.
/// Throws std::logic_error if called on an exhausted state.
NodeId dijkstra_iterate(const RspGraph& g, LabelState& st);

struct DijkstraResult {
  CostVector cost;
  Policy policy;
  std::vector<NodeId> entry_order;
  std::vector<Cost> entry_labels;
  int iterations = 0;
};

/// Runs label setting to completion: exactly N+1 iterations, each moving one
/// node to W, with nondecreasing entry labels.  Throws NoProperPolicyError
/// if the candidate set runs dry first (some nodes cannot force
/// termination).
DijkstraResult dijkstra_run(const RspGraph& g);

}  // namespace rsp
