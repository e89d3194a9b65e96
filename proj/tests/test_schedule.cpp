// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "rsp/schedule.hpp"

using namespace rsp;

TEST_SUITE("schedule") {

TEST_CASE("built-in schedules and their fairness windows") {
  CHECK(Schedule::synchronous(3).size() == 1);
  CHECK(Schedule::synchronous(3).fairness_window(3) == 1);
  CHECK(Schedule::round_robin(3).size() == 3);
  CHECK(Schedule::round_robin(3).fairness_window(3) == 3);
  CHECK(Schedule::round_robin(3).is_fair(3));
  // Extra nodes never improved: not fair for a larger graph.
  CHECK_FALSE(Schedule::round_robin(3).is_fair(4));
  CHECK(Schedule().fairness_window(0) == 1);
  CHECK_FALSE(Schedule().is_fair(2));
}

TEST_CASE("evaluate events do not count toward fairness") {
  Schedule s({{{NodeId(1)}, Phase::kImprove},
              {{NodeId(2)}, Phase::kEvaluate}});
  CHECK(s.is_fair(1));
  CHECK_FALSE(s.is_fair(2));
}

TEST_CASE("the window is the worst cyclic gap between improves") {
  // Node 1 improves at positions 0 and 1 of a length-4 replayed prefix:
  // the wrap-around gap is 3.
  Schedule s({{{NodeId(1)}, Phase::kImprove},
              {{NodeId(1)}, Phase::kImprove},
              {{NodeId(1)}, Phase::kEvaluate},
              {{NodeId(1)}, Phase::kEvaluate}});
  CHECK(s.fairness_window(1) == 3);
}

TEST_CASE("random fair schedules cover every node at every size") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Schedule s = Schedule::random_fair(n, seed);
      CHECK(s.is_fair(n));
    }
  // Block variant over a coarse partition.
  std::vector<std::vector<NodeId>> parts = {{NodeId(1), NodeId(2)},
                                            {NodeId(3)}};
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(Schedule::random_fair_blocks(parts, seed).is_fair(3));
}

}  // TEST_SUITE
