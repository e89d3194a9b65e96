// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>

#include "doctest.h"
#include "rsp/cost.hpp"
#include "rsp/rational.hpp"
#include "rsp/types.hpp"

using namespace rsp;

TEST_SUITE("types") {

TEST_CASE("node ids: destination is 0, ordinary nodes are 1-based") {
  CHECK(NodeId::destination().id() == 0);
  CHECK(NodeId::destination().is_destination());
  CHECK_FALSE(NodeId(3).is_destination());
  CHECK(NodeId(3).index() == 2);
  CHECK(NodeId(1) == NodeId(1));
  CHECK(NodeId(1) != NodeId(2));
}

TEST_CASE("rational parsing and formatting round-trip") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-7/4") == Rational(-7, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational("2.50") == Rational(5, 2));
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
  CHECK(format_rational(parse_rational("0.1")) == "1/10");
  CHECK_THROWS_AS(parse_rational("abc"), std::exception);
  CHECK_THROWS_AS(parse_rational("1/0"), std::exception);
  CHECK_THROWS_AS(parse_rational(""), std::exception);
}

TEST_CASE("extended-real arithmetic follows the convention") {
  const Cost two(2);
  const Cost inf = Cost::infinity();
  const Cost ninf = Cost::minus_infinity();

  CHECK((two + Cost(3)) == Cost(5));
  CHECK((inf + two) == inf);
  CHECK((two + inf) == inf);
  CHECK((ninf + two) == ninf);
  CHECK((inf + inf) == inf);
  CHECK((ninf + ninf) == ninf);
  // The one undefined sum must be loud, not silently absorbed.
  CHECK_THROWS_AS(inf + ninf, std::domain_error);
  CHECK_THROWS_AS(ninf + inf, std::domain_error);

  CHECK((-two) == Cost(-2));
  CHECK((-inf) == ninf);
  CHECK((-ninf) == inf);

  CHECK(ninf < two);
  CHECK(two < inf);
  CHECK(ninf < inf);
  CHECK_FALSE(inf < inf);
  CHECK(min(two, inf) == two);
  CHECK(max(two, ninf) == two);

  CHECK(Cost(Rational(1, 2)).str() == "1/2");
  CHECK(inf.str() == "inf");
  CHECK(ninf.str() == "-inf");
  CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("cost vectors: tilde extension, orders, tolerance") {
  CostVector j = CostVector::zero(3);
  j.at(1) = Cost(5);
  j.at(NodeId(2)) = Cost::infinity();
  CHECK(j.at(NodeId(1)) == Cost(5));
  CHECK(j.at(2).is_pos_infinity());
  CHECK(j.at(3) == Cost(0));
  // The destination always evaluates to 0 regardless of the vector.
  CHECK(j.tilde(NodeId::destination()) == Cost(0));
  CHECK(j.tilde(NodeId(1)) == Cost(5));
  CHECK_FALSE(j.all_finite());
  CHECK(CostVector::zero(2).all_finite());
  CHECK_FALSE(CostVector::infinite(1).all_finite());

  CostVector a = CostVector::zero(2), b = CostVector::zero(2);
  b.at(1) = Cost(1);
  CHECK(componentwise_le(a, b));
  CHECK_FALSE(componentwise_le(b, a));
  CHECK(componentwise_le(a, CostVector::infinite(2)));

  CostVector close = a;
  close.at(1) = Cost(Rational(1, 1000000000000LL));
  CHECK(close.within(a, Rational(1, 1000000)));
  CHECK_FALSE(b.within(a, Rational(1, 1000000)));
  // Infinities only match infinities under any tolerance.
  CHECK(CostVector::infinite(2).within(CostVector::infinite(2), Rational(1)));
  CHECK_FALSE(CostVector::infinite(2).within(a, Rational(1)));
}

}  // TEST_SUITE
