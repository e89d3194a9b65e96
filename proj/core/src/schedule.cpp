// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/schedule.hpp"

#include <algorithm>

#include "rsp/random.hpp"

namespace rsp {

int Schedule::fairness_window(int num_nodes) const {
  if (num_nodes == 0) return 1;
  const int len = size();
  if (len == 0) return 0;

  // Improve positions per node; cyclic max gap over them.
  std::vector<std::vector<int>> pos(num_nodes);
  for (int e = 0; e < len; ++e) {
    if (events_[e].phase != Phase::kImprove) continue;
    for (NodeId x : events_[e].nodes)
      if (!x.is_destination() && x.index() < num_nodes)
        pos[x.index()].push_back(e);
  }
  int window = 1;
  for (int i = 0; i < num_nodes; ++i) {
    if (pos[i].empty()) return 0;
    int worst = pos[i].front() + len - pos[i].back();  // wrap-around gap
    for (std::size_t k = 1; k < pos[i].size(); ++k)
      worst = std::max(worst, pos[i][k] - pos[i][k - 1]);
    window = std::max(window, worst);
  }
  return window;
}

Schedule Schedule::synchronous(int n) {
  ScheduleEvent e;
  for (int i = 1; i <= n; ++i) e.nodes.push_back(NodeId(i));
  return Schedule({std::move(e)});
}

Schedule Schedule::round_robin(int n) {
  std::vector<ScheduleEvent> events;
  for (int i = 1; i <= n; ++i)
    events.push_back({{NodeId(i)}, Phase::kImprove});
  return Schedule(std::move(events));
}

Schedule Schedule::random_fair(int n, std::uint64_t seed, int blocks,
                               int evaluate_percent) {
  Rng rng(seed);
  std::vector<ScheduleEvent> events;
  std::vector<NodeId> perm;
  for (int i = 1; i <= n; ++i) perm.push_back(NodeId(i));
  for (int b = 0; b < blocks; ++b) {
    rng.shuffle(perm);
    for (NodeId x : perm) {
      events.push_back({{x}, Phase::kImprove});
      if (rng.percent(evaluate_percent))
        events.push_back({{NodeId(rng.uniform(1, n))}, Phase::kEvaluate});
    }
  }
  return Schedule(std::move(events));
}

Schedule Schedule::random_fair_blocks(
    const std::vector<std::vector<NodeId>>& partition, std::uint64_t seed,
    int rounds, int evaluate_percent) {
  Rng rng(seed);
  std::vector<ScheduleEvent> events;
  std::vector<int> order(partition.size());
  for (std::size_t i = 0; i < partition.size(); ++i) order[i] = static_cast<int>(i);
  for (int r = 0; r < rounds; ++r) {
    rng.shuffle(order);
    for (int b : order) {
      events.push_back({partition[b], Phase::kImprove});
      if (rng.percent(evaluate_percent)) {
        int other = order[rng.uniform(0, static_cast<int>(order.size()) - 1)];
        events.push_back({partition[other], Phase::kEvaluate});
      }
    }
  }
  return Schedule(std::move(events));
}

}  // namespace rsp
