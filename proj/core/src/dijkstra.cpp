// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/dijkstra.hpp"

#include <stdexcept>
#include <utility>

#include "rsp/errors.hpp"

namespace rsp {
namespace {

// Label of an already-permanent node (the destination counts as label 0).
Rational permanent_label(const LabelState& st, NodeId y) {
  if (y.is_destination()) return Rational(0);
  return st.labels.at(y).value();
}

}  // namespace

LabelState dijkstra_init(const RspGraph& g) {
  if (!g.all_lengths_nonnegative()) {
    throw std::invalid_argument("dijkstra: arc lengths must be nonnegative");
  }
  LabelState st;
  st.labels = CostVector::infinite(g.num_nodes());
  st.permanent.assign(static_cast<std::size_t>(g.num_nodes()), 0);
  st.queue.insert({Rational(0), 0});
  return st;
}

NodeId dijkstra_iterate(const RspGraph& g, LabelState& st) {
  if (st.queue.empty()) {
    throw std::logic_error("dijkstra_iterate: candidate set is empty");
  }
  const auto [label, id] = *st.queue.begin();
  st.queue.erase(st.queue.begin());
  const NodeId star(id);
  if (star.is_destination()) {
    st.destination_permanent = true;
    st.entry_labels.push_back(Cost(0));
  } else {
    st.permanent[star.index()] = 1;
    st.entry_labels.push_back(Cost(label));
  }
  st.entry_order.push_back(star);
  ++st.iterations;

  // Offer each waiting node the controls that now keep the antagonist inside
  // the permanent set; only a strict improvement moves its label.
  for (int i = 1; i <= g.num_nodes(); ++i) {
    const NodeId x(i);
    if (st.in_permanent(x)) continue;
    bool found = false;
    Rational best;
    for (int u = 0; u < g.num_controls(x); ++u) {
      const auto& succ = g.successors(x, u);
      bool contains_star = false;
      bool all_permanent = true;
      for (const Successor& s : succ) {
        if (s.node == star) contains_star = true;
        if (!st.in_permanent(s.node)) {
          all_permanent = false;
          break;
        }
      }
      if (!contains_star || !all_permanent) continue;
      Rational worst;
      bool first = true;
      for (const Successor& s : succ) {
        Rational v = s.length + permanent_label(st, s.node);
        if (first || v > worst) worst = std::move(v);
        first = false;
      }
      if (!found || worst < best) {
        best = std::move(worst);
        found = true;
      }
    }
    if (!found) continue;
    const Cost candidate{best};
    if (candidate < st.labels.at(x)) {
      if (st.labels.at(x).is_finite()) {
        st.queue.erase({st.labels.at(x).value(), i});
      }
      st.labels.at(x) = candidate;
      st.queue.insert({best, i});
    }
  }
  return star;
}

DijkstraResult dijkstra_run(const RspGraph& g) {
  LabelState st = dijkstra_init(g);
  // Remember, for every node, the control that set its final label: its
  // successors all became permanent strictly earlier, so those choices form
  // an acyclic (hence terminating) policy achieving the labels.
  std::vector<int> chosen(static_cast<std::size_t>(g.num_nodes()), 0);
  while (!st.exhausted()) {
    const CostVector before = st.labels;
    dijkstra_iterate(g, st);
    for (int i = 1; i <= g.num_nodes(); ++i) {
      const NodeId x(i);
      if (st.in_permanent(x) || !(st.labels.at(x) < before.at(x))) continue;
      // Recover the arg min among the controls that qualified this round.
      for (int u = 0; u < g.num_controls(x); ++u) {
        const auto& succ = g.successors(x, u);
        bool ok = !succ.empty();
        Cost worst = Cost::minus_infinity();
        for (const Successor& s : succ) {
          if (!st.in_permanent(s.node)) {
            ok = false;
            break;
          }
          worst = max(worst, Cost(s.length + permanent_label(st, s.node)));
        }
        if (ok && worst == st.labels.at(x)) {
          chosen[x.index()] = u;
          break;
        }
      }
    }
  }
  for (std::size_t i = 1; i < st.entry_labels.size(); ++i) {
    if (st.entry_labels[i] < st.entry_labels[i - 1]) {
      throw std::logic_error("dijkstra_run: entry labels decreased");
    }
  }
  if (st.iterations != g.num_nodes() + 1) {
    throw NoProperPolicyError(
        "dijkstra: candidate set exhausted before every node became "
        "permanent; termination cannot be forced from the remaining nodes");
  }
  DijkstraResult r;
  r.cost = st.labels;
  r.policy = Policy::uniform(g.num_nodes());
  for (int i = 1; i <= g.num_nodes(); ++i) {
    r.policy.set_choice(NodeId(i), chosen[static_cast<std::size_t>(i - 1)]);
  }
  r.entry_order = std::move(st.entry_order);
  r.entry_labels = std::move(st.entry_labels);
  r.iterations = st.iterations;
  return r;
}

}  // namespace rsp
