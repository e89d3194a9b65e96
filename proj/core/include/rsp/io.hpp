// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "rsp/cost.hpp"
#include "rsp/graph.hpp"

namespace rsp {

/// Graph file format (line oriented, UTF-8, '#' starts a comment):
///
///   rsp 1                # magic + format version, first line
///   nodes N              # ordinary nodes are 1..N
///   control X NAME       # declares control NAME at node X (order = tie-break order)
///   arc X NAME Y G       # adds successor Y (an id or `t`) at length G
///
/// G is a decimal ("2", "-0.5") or a fraction ("1/3").  Syntax problems
/// throw ParseError; dangling references and structural problems are
/// collected into the report instead, so callers can print full diagnostics.
struct GraphReadResult {
  RspGraph graph;
  ValidationReport report;
};

GraphReadResult read_graph(std::istream& in);
GraphReadResult read_graph_file(const std::string& path);

/// Strict load: throws ParseError on syntax or unreadable file and
/// std::runtime_error listing the violations when the report is nonempty.
RspGraph load_graph_file(const std::string& path);

void write_graph(std::ostream& out, const RspGraph& g);
std::string graph_to_string(const RspGraph& g);

/// Policy files: one `X NAME` line per ordinary node.  Every node must be
/// assigned exactly once to a control that exists at it.
Policy read_policy(std::istream& in, const RspGraph& g);
Policy read_policy_file(const std::string& path, const RspGraph& g);
void write_policy(std::ostream& out, const RspGraph& g, const Policy& mu);

/// Cost files: one `X VALUE` line per ordinary node (destination omitted);
/// VALUE is a rational or the literal `inf` / `-inf`.
CostVector read_cost_vector(std::istream& in, int num_nodes);
CostVector read_cost_vector_file(const std::string& path, int num_nodes);
void write_cost_vector(std::ostream& out, const CostVector& j);

}  // namespace rsp
