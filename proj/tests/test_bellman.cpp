// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "rsp/bellman.hpp"
#include "rsp/policy_eval.hpp"
#include "rsp/generators.hpp"
#include "rsp/graph.hpp"
#include "test_util.hpp"

using namespace rsp;
using namespace rsp::testing;

TEST_SUITE("bellman") {

TEST_CASE("one-step worst case over a successor set") {
  RspGraph g = make_loop_or_finish(1);
  CostVector j = CostVector::zero(1);
  // max(1 + J(1), 0 + 0) with J(1) = 0.
  CHECK(eval_H(g, NodeId(1), 0, j) == Cost(1));
  j.at(1) = Cost(10);
  CHECK(eval_H(g, NodeId(1), 0, j) == Cost(11));
  j.at(1) = Cost::infinity();
  CHECK(eval_H(g, NodeId(1), 0, j).is_pos_infinity());
  j.at(1) = Cost::minus_infinity();
  // The finishing arc dominates the -inf branch.
  CHECK(eval_H(g, NodeId(1), 0, j) == Cost(0));
}

TEST_CASE("min over a free self-loop and a unit stop clips at 1") {
  // T J = min(J, 1) checked across signs, fractions, and the fixed point.
  RspGraph g = make_zero_cycle();
  const std::vector<std::pair<Rational, Rational>> table = {
      {Rational(-5), Rational(-5)},
      {Rational(0), Rational(0)},
      {Rational(1, 2), Rational(1, 2)},
      {Rational(1), Rational(1)},
      {Rational(3), Rational(1)}};
  for (const auto& [in, want] : table) {
    CostVector j = CostVector::zero(1);
    j.at(1) = Cost(in);
    CHECK(apply_T(g, j).at(1) == Cost(want));
    // Fixed point exactly when J <= 1.
    CHECK((apply_T(g, j) == j) == (in <= 1));
  }
}

TEST_CASE("operator agrees with the naive reference on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n_nodes = 4;
    RspGraph g = gen_random(spec);
    // A mixed vector with infinities in both directions.
    CostVector j = CostVector::zero(4);
    j.at(1) = Cost(Rational(-7, 2));
    j.at(2) = Cost::infinity();
    j.at(3) = Cost(5);
    j.at(4) = Cost::minus_infinity();
    CostVector tj = apply_T(g, j);
    for (int x = 1; x <= 4; ++x) CHECK(tj.at(x) == ref_T_at(g, NodeId(x), j));
  }
}

TEST_CASE("fixed-policy operator iterates match the k-stage recursion") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n_nodes = 3;
    RspGraph g = gen_random(spec);
    Policy mu = Policy::uniform(3);
    do {
      CostVector j = CostVector::zero(3);
      for (int k = 1; k <= 4; ++k) {
        j = apply_Tmu(g, mu, j);
        for (int x = 1; x <= 3; ++x)
          CHECK(j.at(x) == ref_stage_cost(g, mu, NodeId(x), k));
      }
    } while (advance_policy(g, mu));
  }
}

TEST_CASE("greedy selection breaks ties toward the first declared control") {
  RspGraph g = make_zero_cycle();
  CostVector j = CostVector::zero(1);
  j.at(1) = Cost(1);  // stay and stop both evaluate to 1
  Policy mu = greedy_policy(g, j);
  CHECK(mu.choice(NodeId(1)) == 0);
  CHECK(g.control(NodeId(1), mu.choice(NodeId(1))).name == "stay");

  j.at(1) = Cost(5);  // stop (1) beats stay (5)
  CHECK(greedy_policy(g, j).choice(NodeId(1)) == 1);

  GreedyResult gr = greedy_with_values(g, j);
  CHECK(gr.values.at(1) == Cost(1));
  CHECK(gr.policy.choice(NodeId(1)) == 1);
  CHECK(gr.values == apply_T(g, j));
}

TEST_CASE("certificate check accepts the fixed point and rejects others") {
  RspGraph g = make_layered4();
  CostVector star = CostVector::zero(4);
  star.at(1) = Cost(3);
  star.at(2) = Cost(6);
  star.at(3) = Cost(5);
  star.at(4) = Cost(4);
  Policy best = greedy_policy(g, star);
  CHECK(verify_bellman(g, best, star));
  CHECK(apply_T(g, star) == star);

  CostVector off = star;
  off.at(2) = Cost(7);
  CHECK_FALSE(verify_bellman(g, best, off));

  // Tolerance mode accepts a value within eps of the fixed point.
  CostVector close = star;
  close.at(1) = Cost(Rational(3) + Rational(1, 1000000000000LL));
  CHECK_FALSE(verify_bellman(g, best, close));
  CHECK(verify_bellman(g, best, close, Rational(1, 1000000)));
}

}  // TEST_SUITE
