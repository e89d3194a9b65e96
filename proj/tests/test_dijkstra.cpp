// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "rsp/bellman.hpp"
#include "rsp/dijkstra.hpp"
#include "rsp/policy_eval.hpp"
#include "rsp/errors.hpp"
#include "rsp/generators.hpp"
#include "rsp/oracle.hpp"
#include "rsp/policy_analysis.hpp"
#include "rsp/value_iteration.hpp"
#include "test_util.hpp"

using namespace rsp;
using namespace rsp::testing;

TEST_SUITE("dijkstra") {

TEST_CASE("label setting on the layered instance: order, labels, count") {
  RspGraph g = make_layered4();
  DijkstraResult r = dijkstra_run(g);
  CHECK(r.cost == vi_from_infinity(g).cost);
  CHECK(r.iterations == 5);  // N + 1 including the destination
  REQUIRE(r.entry_order.size() == 5);
  CHECK(r.entry_order[0].is_destination());
  CHECK(r.entry_order[1] == NodeId(1));
  CHECK(r.entry_order[2] == NodeId(4));
  CHECK(r.entry_order[3] == NodeId(3));
  CHECK(r.entry_order[4] == NodeId(2));
  REQUIRE(r.entry_labels.size() == 5);
  CHECK(r.entry_labels[0] == Cost(0));
  CHECK(r.entry_labels[1] == Cost(3));
  CHECK(r.entry_labels[2] == Cost(4));
  CHECK(r.entry_labels[3] == Cost(5));
  CHECK(r.entry_labels[4] == Cost(6));
  CHECK(ref_is_proper(g, r.policy));
  CHECK(verify_bellman(g, r.policy, r.cost));
}

TEST_CASE("negative lengths are refused up front") {
  CHECK_THROWS_AS(dijkstra_run(make_negative_self()), std::invalid_argument);
  CHECK_THROWS_AS(dijkstra_init(make_oscillation_pair()),
                  std::invalid_argument);
}

TEST_CASE("termination not forcible: the queue exhausts early") {
  // Nonnegative lengths but the only policy loops, so no node ever enters W.
  CHECK_THROWS_AS(dijkstra_run(make_loop_or_finish(1)), NoProperPolicyError);
}

TEST_CASE("equality with the oracle on generated label-setting instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n_nodes = 5;
    spec.length_min = 0;
    spec.target = GenTarget::kNonnegativeLengths;
    RspGraph g = gen_random(spec);
    auto orc = brute_force(g);
    REQUIRE(orc.j_hat.has_value());
    DijkstraResult r = dijkstra_run(g);
    CHECK(r.cost == *orc.j_hat);
    CHECK(r.iterations == 6);
    CHECK(ref_is_proper(g, r.policy));
    CHECK(eval_proper(g, r.policy).cost == *orc.j_hat);
  }
}

TEST_CASE("monotonicity invariants during the sweep") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n_nodes = 5;
    spec.length_min = 0;
    spec.target = GenTarget::kNonnegativeLengths;
    RspGraph g = gen_random(spec);

    LabelState st = dijkstra_init(g);
    Cost last_entry = Cost(0);
    CostVector previous = st.labels;
    std::vector<char> was_permanent(5, 0);
    while (!st.exhausted()) {
      NodeId entered = dijkstra_iterate(g, st);
      // Entry labels never decrease.
      Cost entry = entered.is_destination() ? Cost(0) : previous.at(entered);
      CHECK(last_entry <= entry);
      last_entry = entry;
      for (int x = 1; x <= 5; ++x) {
        // No label ever increases.
        CHECK(st.labels.at(x) <= previous.at(x));
        // Nodes never leave the permanent set or re-enter the queue.
        if (was_permanent[x - 1]) {
          CHECK(st.in_permanent(NodeId(x)));
          for (const auto& [lbl, id] : st.queue) CHECK(id != x);
        }
        if (st.in_permanent(NodeId(x))) was_permanent[x - 1] = 1;
      }
      previous = st.labels;
    }
    CHECK(st.iterations == 6);
  }
}

}  // TEST_SUITE
