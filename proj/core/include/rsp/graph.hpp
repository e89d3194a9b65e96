// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsp/rational.hpp"
#include "rsp/types.hpp"

namespace rsp {

/// One possible outcome of playing a control: the opponent may send the state
/// to `node` at cost `length`.
struct Successor {
  NodeId node;
  Rational length;

  friend bool operator==(const Successor&, const Successor&) = default;
};

/// A control: its declared name plus the successor set Y(x,u) with the arc
/// lengths g(x,u,y).  Successor order is declaration order and is what every
/// deterministic tie-break in the library keys on.
struct ControlSpec {
  std::string name;
  std::vector<Successor> successors;
};

/// Finite graph for the minimax shortest path model.  Ordinary nodes are
/// 1..N; the destination (node 0) is absorbing and cost-free and therefore
/// stores no controls.  After a control u is played at x, an antagonistic
/// opponent picks the successor y from Y(x,u); g(x,u,y) is paid.
///
/// The builder deliberately accepts malformed data (dangling node ids,
/// duplicate names, empty successor sets): validate_graph reports such
/// violations instead, so file loaders can produce full diagnostics.
class RspGraph {
 public:
  RspGraph() = default;
  explicit RspGraph(int num_nodes) : controls_(num_nodes) {}

  int num_nodes() const { return static_cast<int>(controls_.size()); }

  /// Appends a control at x and returns its index.
  int add_control(NodeId x, std::string name);
  /// Appends y to the successor set of control u at x.
  void add_arc(NodeId x, int control, NodeId y, Rational length);

  int num_controls(NodeId x) const { return static_cast<int>(controls_.at(x.index()).size()); }
  const std::vector<ControlSpec>& controls(NodeId x) const { return controls_.at(x.index()); }
  const ControlSpec& control(NodeId x, int u) const { return controls_.at(x.index()).at(u); }
  const std::vector<Successor>& successors(NodeId x, int u) const {
    return control(x, u).successors;
  }
  std::optional<int> control_index(NodeId x, std::string_view name) const;

  long long num_arcs() const;
  /// Largest arc length; 0 for an arc-free graph.
  Rational max_length() const;
  /// Largest absolute arc length; 0 for an arc-free graph.
  Rational max_abs_length() const;
  bool all_lengths_nonnegative() const;

 private:
  std::vector<std::vector<ControlSpec>> controls_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Structural validation: every node has a control, every control a nonempty
/// successor set, all referenced nodes exist, no duplicate control names at a
/// node, no duplicate successor within a control.  (Lengths are exact
/// rationals by construction, so non-finite lengths cannot occur.)
ValidationReport validate_graph(const RspGraph& g);

/// A policy fixes one control index per ordinary node.
class Policy {
 public:
  Policy() = default;
  explicit Policy(std::vector<int> choice) : choice_(std::move(choice)) {}

  /// All-`control` policy over n nodes (control 0 = lexicographically first).
  static Policy uniform(int n, int control = 0) {
    return Policy(std::vector<int>(n, control));
  }

  int size() const { return static_cast<int>(choice_.size()); }
  int choice(NodeId x) const { return choice_.at(x.index()); }
  void set_choice(NodeId x, int u) { choice_.at(x.index()) = u; }
  const std::vector<int>& choices() const { return choice_; }

  bool valid_for(const RspGraph& g) const;

  friend bool operator==(const Policy&, const Policy&) = default;
  /// Lexicographic order; enumeration order of the oracle.
  friend auto operator<=>(const Policy& a, const Policy& b) {
    return a.choice_ <=> b.choice_;
  }

 private:
  std::vector<int> choice_;
};

/// Odometer step through policies in lexicographic order.  Returns false when
/// mu wrapped back to the all-zero policy (enumeration complete).
bool advance_policy(const RspGraph& g, Policy& mu);

/// Number of distinct policies, saturated at `cap` + 1.
unsigned long long policy_count_capped(const RspGraph& g, unsigned long long cap);

}  // namespace rsp
