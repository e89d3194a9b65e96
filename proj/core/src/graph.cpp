// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/graph.hpp"

#include <set>
#include <stdexcept>

namespace rsp {

int RspGraph::add_control(NodeId x, std::string name) {
  auto& list = controls_.at(x.index());
  list.push_back(ControlSpec{std::move(name), {}});
  return static_cast<int>(list.size()) - 1;
}

void RspGraph::add_arc(NodeId x, int control, NodeId y, Rational length) {
  controls_.at(x.index()).at(control).successors.push_back(
      Successor{y, std::move(length)});
}

std::optional<int> RspGraph::control_index(NodeId x,
                                           std::string_view name) const {
  const auto& list = controls_.at(x.index());
  for (int u = 0; u < static_cast<int>(list.size()); ++u)
    if (list[u].name == name) return u;
  return std::nullopt;
}

long long RspGraph::num_arcs() const {
  long long n = 0;
  for (const auto& node : controls_)
    for (const auto& c : node) n += static_cast<long long>(c.successors.size());
  return n;
}

Rational RspGraph::max_length() const {
  Rational best = 0;
  bool first = true;
  for (const auto& node : controls_)
    for (const auto& c : node)
      for (const auto& s : c.successors) {
        if (first || s.length > best) best = s.length;
        first = false;
      }
  return best;
}

Rational RspGraph::max_abs_length() const {
  Rational best = 0;
  for (const auto& node : controls_)
    for (const auto& c : node)
      for (const auto& s : c.successors) {
        Rational a = s.length < 0 ? Rational(-s.length) : s.length;
        if (a > best) best = a;
      }
  return best;
}

bool RspGraph::all_lengths_nonnegative() const {
  for (const auto& node : controls_)
    for (const auto& c : node)
      for (const auto& s : c.successors)
        if (s.length < 0) return false;
  return true;
}

ValidationReport validate_graph(const RspGraph& g) {
  ValidationReport report;
  auto flag = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  for (int i = 1; i <= g.num_nodes(); ++i) {
    NodeId x(i);
    const auto& controls = g.controls(x);
    if (controls.empty()) {
      flag("node " + std::to_string(i) + " has no controls");
      continue;
    }
    std::set<std::string> names;
    for (int u = 0; u < static_cast<int>(controls.size()); ++u) {
      const ControlSpec& c = controls[u];
      if (!names.insert(c.name).second)
        flag("node " + std::to_string(i) + ": duplicate control name '" +
             c.name + "'");
      if (c.successors.empty()) {
        flag("node " + std::to_string(i) + " control '" + c.name +
             "': empty successor set");
        continue;
      }
      std::set<int> seen;
      for (const Successor& s : c.successors) {
        if (s.node.id() < 0 || s.node.id() > g.num_nodes())
          flag("node " + std::to_string(i) + " control '" + c.name +
               "': dangling successor node " + std::to_string(s.node.id()));
        else if (!seen.insert(s.node.id()).second)
          flag("node " + std::to_string(i) + " control '" + c.name +
               "': duplicate successor node " + std::to_string(s.node.id()));
      }
    }
  }
  return report;
}

bool Policy::valid_for(const RspGraph& g) const {
  if (size() != g.num_nodes()) return false;
  for (int i = 1; i <= g.num_nodes(); ++i) {
    int u = choice(NodeId(i));
    if (u < 0 || u >= g.num_controls(NodeId(i))) return false;
  }
  return true;
}

bool advance_policy(const RspGraph& g, Policy& mu) {
  for (int i = g.num_nodes(); i >= 1; --i) {
    NodeId x(i);
    if (mu.choice(x) + 1 < g.num_controls(x)) {
      mu.set_choice(x, mu.choice(x) + 1);
      return true;
    }
    mu.set_choice(x, 0);
  }
  return false;
}

unsigned long long policy_count_capped(const RspGraph& g,
                                       unsigned long long cap) {
  unsigned long long count = 1;
  for (int i = 1; i <= g.num_nodes(); ++i) {
    unsigned long long k = g.num_controls(NodeId(i));
    if (k == 0) k = 1;  // invalid graph; validation reports it separately
    if (count > cap / k) return cap + 1;
    count *= k;
  }
  return count;
}

}  // namespace rsp
