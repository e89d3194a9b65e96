// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace rsp {

// All quantities in the library are exact rationals.  cpp_rational keeps
// numerator/denominator normalized and never overflows, so equality-based
// convergence tests are sound.  Everything that needs the backend goes
// through this alias; swapping in a fixed-width fast path would be local to
// this header.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3", "-7/2" or "0.25" (decimals become exact rationals).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
/// parse_rational(format_rational(r)) == r, bit for bit.
std::string format_rational(const Rational& r);

}  // namespace rsp
