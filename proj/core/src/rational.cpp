// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rsp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  auto fail = [&] {
    throw std::invalid_argument("not a rational number: '" + std::string(text) +
                                "'");
  };

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    const BigInt p{std::string(num)};
    const BigInt q{std::string(den)};
    if (q == 0) fail();
    value = Rational(p, q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    // Allow ".5" and "5." but not "." alone.
    if (whole.empty() && frac.empty()) fail();
    if (!whole.empty() && !all_digits(whole)) fail();
    if (!frac.empty() && !all_digits(frac)) fail();
    BigInt p = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt scale = 1;
    for (char c : frac) {
      p = p * 10 + (c - '0');
      scale *= 10;
    }
    value = Rational(p, scale);
  } else {
    if (!all_digits(s)) fail();
    value = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace rsp
