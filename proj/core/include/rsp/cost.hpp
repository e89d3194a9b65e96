// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "rsp/rational.hpp"
#include "rsp/types.hpp"

namespace rsp {

/// Extended cost value: a finite rational or one of the two infinities.
///
/// Addition follows the usual extended-real rules except that (+inf) + (-inf)
/// is a hard error (std::domain_error) rather than a silent convention —
/// worst-case costs where that sum appears would certify nothing.
class Cost {
 public:
  Cost() : kind_(Kind::kFinite) {}
  Cost(Rational v) : kind_(Kind::kFinite), value_(std::move(v)) {}
  Cost(long long v) : kind_(Kind::kFinite), value_(v) {}
  Cost(int v) : kind_(Kind::kFinite), value_(v) {}

  static Cost infinity();
  static Cost minus_infinity();

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_pos_infinity() const { return kind_ == Kind::kPosInf; }
  bool is_neg_infinity() const { return kind_ == Kind::kNegInf; }

  /// Finite payload; throws std::logic_error on an infinity.
  const Rational& value() const;

  friend Cost operator+(const Cost& a, const Cost& b);
  Cost& operator+=(const Cost& other);
  friend Cost operator-(const Cost& a);

  friend bool operator==(const Cost& a, const Cost& b);
  friend bool operator!=(const Cost& a, const Cost& b) { return !(a == b); }
  friend bool operator<(const Cost& a, const Cost& b);
  friend bool operator<=(const Cost& a, const Cost& b) { return !(b < a); }
  friend bool operator>(const Cost& a, const Cost& b) { return b < a; }
  friend bool operator>=(const Cost& a, const Cost& b) { return !(a < b); }

  /// "inf", "-inf" or the canonical rational text.
  std::string str() const;

 private:
  enum class Kind { kFinite, kPosInf, kNegInf };
  Kind kind_;
  Rational value_;
};

inline const Cost& min(const Cost& a, const Cost& b) { return b < a ? b : a; }
inline const Cost& max(const Cost& a, const Cost& b) { return a < b ? b : a; }

/// Cost vector over the ordinary nodes 1..n.  The destination is not stored:
/// tilde() exposes the standard extension J~ with J~(t) = 0, which is what
/// every Bellman-style expression consumes.
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(int n, Cost fill = Cost(0)) : v_(n, std::move(fill)) {}

  static CostVector zero(int n) { return CostVector(n); }
  static CostVector constant(int n, Cost c) { return CostVector(n, std::move(c)); }
  static CostVector infinite(int n) { return CostVector(n, Cost::infinity()); }

  int size() const { return static_cast<int>(v_.size()); }

  Cost& at(NodeId x) { return v_.at(x.index()); }
  const Cost& at(NodeId x) const { return v_.at(x.index()); }
  Cost& at(int node_id) { return v_.at(node_id - 1); }
  const Cost& at(int node_id) const { return v_.at(node_id - 1); }

  /// J~(y): the stored value for ordinary y, 0 for the destination.
  Cost tilde(NodeId y) const { return y.is_destination() ? Cost(0) : at(y); }

  bool all_finite() const;
  friend bool operator==(const CostVector& a, const CostVector& b) = default;

  /// Componentwise a <= b (extended order).
  friend bool componentwise_le(const CostVector& a, const CostVector& b);

  /// Sup-norm closeness for tolerance-mode convergence tests.  Infinite
  /// entries must match in kind; finite entries must differ by at most tol.
  bool within(const CostVector& other, const Rational& tol) const;

  /// "(v1, v2, ..., vn)" — diagnostics only.
  std::string str() const;

 private:
  std::vector<Cost> v_;
};

}  // namespace rsp
