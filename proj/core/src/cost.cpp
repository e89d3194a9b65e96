// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/cost.hpp"

#include <stdexcept>

namespace rsp {

Cost Cost::infinity() {
  Cost c;
  c.kind_ = Kind::kPosInf;
  return c;
}

Cost Cost::minus_infinity() {
  Cost c;
  c.kind_ = Kind::kNegInf;
  return c;
}

const Rational& Cost::value() const {
  if (kind_ != Kind::kFinite)
    throw std::logic_error("value() called on an infinite cost");
  return value_;
}

Cost operator+(const Cost& a, const Cost& b) {
  if (a.is_finite() && b.is_finite()) return Cost(a.value_ + b.value_);
  if ((a.is_pos_infinity() && b.is_neg_infinity()) ||
      (a.is_neg_infinity() && b.is_pos_infinity()))
    throw std::domain_error("indeterminate extended sum: inf + -inf");
  return a.is_finite() ? b : a;
}

Cost& Cost::operator+=(const Cost& other) {
  *this = *this + other;
  return *this;
}

Cost operator-(const Cost& a) {
  if (a.is_pos_infinity()) return Cost::minus_infinity();
  if (a.is_neg_infinity()) return Cost::infinity();
  return Cost(-a.value_);
}

bool operator==(const Cost& a, const Cost& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

bool operator<(const Cost& a, const Cost& b) {
  if (a.is_neg_infinity()) return !b.is_neg_infinity();
  if (a.is_pos_infinity()) return false;
  if (b.is_pos_infinity()) return true;
  if (b.is_neg_infinity()) return false;
  return a.value_ < b.value_;
}

std::string Cost::str() const {
  switch (kind_) {
    case Kind::kPosInf:
      return "inf";
    case Kind::kNegInf:
      return "-inf";
    default:
      return format_rational(value_);
  }
}

bool CostVector::all_finite() const {
  for (const Cost& c : v_)
    if (!c.is_finite()) return false;
  return true;
}

bool componentwise_le(const CostVector& a, const CostVector& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (!(a.v_[i] <= b.v_[i])) return false;
  return true;
}

bool CostVector::within(const CostVector& other, const Rational& tol) const {
  if (size() != other.size()) return false;
  for (int i = 0; i < size(); ++i) {
    const Cost& a = v_[i];
    const Cost& b = other.v_[i];
    if (a.is_finite() != b.is_finite()) return false;
    if (!a.is_finite()) {
      if (a != b) return false;
      continue;
    }
    Rational diff = a.value() - b.value();
    if (diff < 0) diff = -diff;
    if (diff > tol) return false;
  }
  return true;
}

std::string CostVector::str() const {
  std::string out = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ", ";
    out += v_[i].str();
  }
  out += ")";
  return out;
}

}  // namespace rsp
