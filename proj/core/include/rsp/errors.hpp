// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rsp {

/// Input text (graph, policy or cost file) is syntactically malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that needs a proper policy was applied to an instance that has
/// none (or, for label setting, the candidate set ran dry before every node
/// was labeled, which proves the same thing).
class NoProperPolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A running algorithm observed behaviour that its convergence guarantees rule
/// out, e.g. value iteration from +inf fails to settle within its finite
/// bound, or policy iteration generates an improper policy.  This signals
/// that the instance violates the working assumptions; the partial state is
/// not returned because it certifies nothing.
class AssumptionViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive policy enumeration would exceed the configured cap.
class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rsp
