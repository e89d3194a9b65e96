// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "rsp/errors.hpp"

namespace rsp {
namespace {

std::optional<int> parse_int(const std::string& tok) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw;
  if (const auto hash = line.find('#'); hash != std::string::npos) {
    line.erase(hash);
  }
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

// Node token for a successor position: 't' or an ordinary id.
std::optional<NodeId> parse_successor(const std::string& tok, int n) {
  if (tok == "t") return NodeId::destination();
  const auto id = parse_int(tok);
  if (!id || *id < 1 || *id > n) return std::nullopt;
  return NodeId(*id);
}

}  // namespace

GraphReadResult read_graph(std::istream& in) {
  GraphReadResult out;
  std::string raw;
  int lineno = 0;
  bool saw_magic = false;
  bool saw_nodes = false;
  int n = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (!saw_magic) {
      if (toks.size() != 2 || toks[0] != "rsp" || toks[1] != "1") {
        fail(lineno, "expected magic line 'rsp 1'");
      }
      saw_magic = true;
      continue;
    }
    if (toks[0] == "nodes") {
      if (saw_nodes) fail(lineno, "duplicate 'nodes' line");
      if (toks.size() != 2) fail(lineno, "expected 'nodes N'");
      const auto count = parse_int(toks[1]);
      if (!count || *count < 0) fail(lineno, "bad node count '" + toks[1] + "'");
      n = *count;
      out.graph = RspGraph(n);
      saw_nodes = true;
      continue;
    }
    if (!saw_nodes) fail(lineno, "'nodes N' must precede '" + toks[0] + "'");
    if (toks[0] == "control") {
      if (toks.size() != 3) fail(lineno, "expected 'control X NAME'");
      const auto x = parse_int(toks[1]);
      if (!x) fail(lineno, "bad node id '" + toks[1] + "'");
      if (*x < 1 || *x > n) {
        out.report.violations.push_back(
            "line " + std::to_string(lineno) + ": control at unknown node " +
            toks[1]);
        continue;
      }
      out.graph.add_control(NodeId(*x), toks[2]);
      continue;
    }
    if (toks[0] == "arc") {
      if (toks.size() != 5) fail(lineno, "expected 'arc X NAME Y G'");
      const auto x = parse_int(toks[1]);
      if (!x) fail(lineno, "bad node id '" + toks[1] + "'");
      Rational length;
      try {
        length = parse_rational(toks[4]);
      } catch (const std::invalid_argument&) {
        fail(lineno, "bad length '" + toks[4] + "'");
      }
      if (*x < 1 || *x > n) {
        out.report.violations.push_back(
            "line " + std::to_string(lineno) + ": arc at unknown node " +
            toks[1]);
        continue;
      }
      const NodeId node(*x);
      const auto u = out.graph.control_index(node, toks[2]);
      if (!u) {
        out.report.violations.push_back(
            "line " + std::to_string(lineno) + ": arc references undeclared "
            "control '" + toks[2] + "' at node " + toks[1]);
        continue;
      }
      const auto y = parse_successor(toks[3], n);
      if (!y) {
        out.report.violations.push_back(
            "line " + std::to_string(lineno) + ": arc to unknown node '" +
            toks[3] + "'");
        continue;
      }
      out.graph.add_arc(node, *u, *y, length);
      continue;
    }
    fail(lineno, "unknown directive '" + toks[0] + "'");
  }
  if (!saw_magic) throw ParseError("empty input: expected magic line 'rsp 1'");
  if (!saw_nodes) throw ParseError("missing 'nodes N' line");
  const ValidationReport structural = validate_graph(out.graph);
  out.report.violations.insert(out.report.violations.end(),
                               structural.violations.begin(),
                               structural.violations.end());
  return out;
}

GraphReadResult read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_graph(in);
}

RspGraph load_graph_file(const std::string& path) {
  GraphReadResult r = read_graph_file(path);
  if (!r.report.ok()) {
    std::string msg = "invalid graph '" + path + "':";
    for (const auto& v : r.report.violations) msg += "\n  " + v;
    throw std::runtime_error(msg);
  }
  return std::move(r.graph);
}

void write_graph(std::ostream& out, const RspGraph& g) {
  out << "rsp 1\n";
  out << "nodes " << g.num_nodes() << "\n";
  for (int i = 1; i <= g.num_nodes(); ++i) {
    const NodeId x(i);
    for (int u = 0; u < g.num_controls(x); ++u) {
      const ControlSpec& c = g.control(x, u);
      out << "control " << i << " " << c.name << "\n";
      for (const Successor& s : c.successors) {
        out << "arc " << i << " " << c.name << " ";
        if (s.node.is_destination()) {
          out << "t";
        } else {
          out << s.node.id();
        }
        out << " " << format_rational(s.length) << "\n";
      }
    }
  }
}

std::string graph_to_string(const RspGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Policy read_policy(std::istream& in, const RspGraph& g) {
  const int n = g.num_nodes();
  std::vector<int> choice(static_cast<std::size_t>(n), -1);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (toks.size() != 2) fail(lineno, "expected 'X NAME'");
    const auto x = parse_int(toks[0]);
    if (!x || *x < 1 || *x > n) {
      fail(lineno, "unknown node '" + toks[0] + "'");
    }
    const auto u = g.control_index(NodeId(*x), toks[1]);
    if (!u) {
      fail(lineno, "no control named '" + toks[1] + "' at node " + toks[0]);
    }
    if (choice[static_cast<std::size_t>(*x - 1)] != -1) {
      fail(lineno, "node " + toks[0] + " assigned twice");
    }
    choice[static_cast<std::size_t>(*x - 1)] = *u;
  }
  for (int i = 0; i < n; ++i) {
    if (choice[static_cast<std::size_t>(i)] == -1) {
      throw ParseError("policy file: node " + std::to_string(i + 1) +
                       " has no choice");
    }
  }
  return Policy(std::move(choice));
}

Policy read_policy_file(const std::string& path, const RspGraph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_policy(in, g);
}

void write_policy(std::ostream& out, const RspGraph& g, const Policy& mu) {
  for (int i = 1; i <= g.num_nodes(); ++i) {
    const NodeId x(i);
    out << i << " " << g.control(x, mu.choice(x)).name << "\n";
  }
}

CostVector read_cost_vector(std::istream& in, int num_nodes) {
  std::vector<std::optional<Cost>> values(static_cast<std::size_t>(num_nodes));
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (toks.size() != 2) fail(lineno, "expected 'X VALUE'");
    const auto x = parse_int(toks[0]);
    if (!x || *x < 1 || *x > num_nodes) {
      fail(lineno, "unknown node '" + toks[0] + "'");
    }
    auto& slot = values[static_cast<std::size_t>(*x - 1)];
    if (slot) fail(lineno, "node " + toks[0] + " assigned twice");
    if (toks[1] == "inf") {
      slot = Cost::infinity();
    } else if (toks[1] == "-inf") {
      slot = Cost::minus_infinity();
    } else {
      try {
        slot = Cost(parse_rational(toks[1]));
      } catch (const std::invalid_argument&) {
        fail(lineno, "bad value '" + toks[1] + "'");
      }
    }
  }
  CostVector j = CostVector::zero(num_nodes);
  for (int i = 0; i < num_nodes; ++i) {
    const auto& slot = values[static_cast<std::size_t>(i)];
    if (!slot) {
      throw ParseError("cost file: node " + std::to_string(i + 1) +
                       " has no value");
    }
    j.at(i + 1) = *slot;
  }
  return j;
}

CostVector read_cost_vector_file(const std::string& path, int num_nodes) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_cost_vector(in, num_nodes);
}

void write_cost_vector(std::ostream& out, const CostVector& j) {
  for (int i = 1; i <= j.size(); ++i) {
    out << i << " " << j.at(i).str() << "\n";
  }
}

}  // namespace rsp
