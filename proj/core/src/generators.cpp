// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/generators.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "rsp/errors.hpp"
#include "rsp/random.hpp"

namespace rsp {
namespace {

constexpr unsigned long long kGenPolicyCap = 1000000;

bool has_zero_mean_improper_cycle(const RspGraph& g) {
  if (policy_count_capped(g, kGenPolicyCap) > kGenPolicyCap) {
    throw EnumerationCapError(
        "zero-cycle screening: too many policies to enumerate");
  }
  Policy mu = Policy::uniform(g.num_nodes());
  do {
    const PolicySubgraph sub = policy_subgraph(g, mu);
    if (!is_proper(sub) &&
        cycle_extremes(sub, g, mu).min_mean == Cost(0)) {
      return true;
    }
  } while (advance_policy(g, mu));
  return false;
}

}  // namespace

RspGraph gen_random(const GenSpec& spec) {
  long lo = spec.length_min;
  const long hi = spec.length_max;
  if (spec.target == GenTarget::kNonnegativeLengths && lo < 0) lo = 0;
  if (spec.n_nodes < 0 || spec.max_controls < 1 || spec.max_branch < 1 ||
      lo > hi) {
    throw std::invalid_argument("gen_random: malformed spec");
  }
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    RspGraph g(spec.n_nodes);
    for (int i = 1; i <= spec.n_nodes; ++i) {
      const NodeId x(i);
      const int nc = rng.uniform(1, spec.max_controls);
      for (int u = 0; u < nc; ++u) {
        const int idx = g.add_control(x, "u" + std::to_string(u + 1));
        const int nb = rng.uniform(1, spec.max_branch);
        std::vector<int> targets;
        for (int b = 0; b < nb; ++b) {
          const int y = rng.uniform(0, spec.n_nodes);  // 0 = destination
          if (std::find(targets.begin(), targets.end(), y) == targets.end()) {
            targets.push_back(y);
          }
        }
        for (int y : targets) {
          g.add_arc(x, idx, NodeId(y),
                    Rational(rng.uniform(static_cast<int>(lo),
                                         static_cast<int>(hi))));
        }
      }
    }
    bool ok = true;
    switch (spec.target) {
      case GenTarget::kNone:
        break;
      case GenTarget::kProperPositiveCycles:
        ok = check_assumption(g, Assumption::kProperPositiveCycles).holds;
        break;
      case GenTarget::kProperNonnegativeCycles:
        ok = check_assumption(g, Assumption::kProperNonnegativeCycles).holds;
        break;
      case GenTarget::kNonnegativeLengths:
        ok = check_assumption(g, Assumption::kNonnegativeLengths).holds;
        break;
    }
    if (ok && spec.require_zero_cycle) ok = has_zero_mean_improper_cycle(g);
    if (ok) return g;
  }
  throw std::runtime_error(
      "gen_random: no instance met the target regime within max_attempts");
}

RspGraph gen_search(const SearchSpec& spec) {
  if (spec.stop_cost_min < 0 || spec.move_cost_min < 0) {
    throw std::invalid_argument("gen_search: costs must be nonnegative");
  }
  if (spec.stop_cost_max < spec.stop_cost_min ||
      spec.move_cost_max < spec.move_cost_min || spec.n_nodes < 0 ||
      spec.max_continue < 0 || spec.max_branch < 1) {
    throw std::invalid_argument("gen_search: malformed spec");
  }
  Rng rng(spec.seed);
  RspGraph g(spec.n_nodes);
  for (int i = 1; i <= spec.n_nodes; ++i) {
    const NodeId x(i);
    const int stop = g.add_control(x, "stop");
    g.add_arc(x, stop, NodeId::destination(),
              Rational(rng.uniform(static_cast<int>(spec.stop_cost_min),
                                   static_cast<int>(spec.stop_cost_max))));
    const int k = rng.uniform(0, spec.max_continue);
    for (int j = 1; j <= k; ++j) {
      const int u = g.add_control(x, "go" + std::to_string(j));
      const Rational move_cost(
          rng.uniform(static_cast<int>(spec.move_cost_min),
                      static_cast<int>(spec.move_cost_max)));
      const int nb = rng.uniform(1, spec.max_branch);
      std::vector<int> targets;
      for (int b = 0; b < nb; ++b) {
        const int y = rng.uniform(1, std::max(1, spec.n_nodes));
        if (std::find(targets.begin(), targets.end(), y) == targets.end()) {
          targets.push_back(y);
        }
      }
      for (int y : targets) g.add_arc(x, u, NodeId(y), move_cost);
    }
  }
  return g;
}

namespace {

std::string cell_name(int lin, int width) {
  return "r" + std::to_string(lin / width) + "c" + std::to_string(lin % width);
}

std::string move_name(int from_lin, int to_lin, int width) {
  if (from_lin == to_lin) return "stay";
  const int dr = to_lin / width - from_lin / width;
  const int dc = to_lin % width - from_lin % width;
  if (dr == -1 && dc == 0) return "up";
  if (dr == 1 && dc == 0) return "down";
  if (dc == -1 && dr == 0) return "left";
  return "right";
}

}  // namespace

PursuitResult gen_pursuit(const PursuitSpec& spec) {
  const int W = spec.width;
  const int H = spec.height;
  if (W <= 0 || H <= 0) {
    throw std::invalid_argument("gen_pursuit: grid dimensions must be positive");
  }
  std::vector<char> blocked(static_cast<std::size_t>(W) * H, 0);
  for (const auto& [r, c] : spec.obstacles) {
    if (r < 0 || r >= H || c < 0 || c >= W) {
      throw std::invalid_argument("gen_pursuit: obstacle outside the grid");
    }
    blocked[static_cast<std::size_t>(r) * W + c] = 1;
  }
  std::vector<int> cells;               // free cells by linear coordinate
  std::vector<int> cell_index(blocked.size(), -1);
  for (std::size_t lin = 0; lin < blocked.size(); ++lin) {
    if (!blocked[lin]) {
      cell_index[lin] = static_cast<int>(cells.size());
      cells.push_back(static_cast<int>(lin));
    }
  }
  const int C = static_cast<int>(cells.size());
  if (C == 0) throw std::invalid_argument("gen_pursuit: no free cells");

  // 4-neighborhoods of free cells, ascending by linear coordinate.
  std::vector<std::vector<int>> neighbors(C);
  for (int ci = 0; ci < C; ++ci) {
    const int lin = cells[ci];
    const int r = lin / W;
    const int c = lin % W;
    std::vector<int> lins;
    if (r > 0 && !blocked[static_cast<std::size_t>(lin - W)]) lins.push_back(lin - W);
    if (c > 0 && !blocked[static_cast<std::size_t>(lin - 1)]) lins.push_back(lin - 1);
    if (c + 1 < W && !blocked[static_cast<std::size_t>(lin + 1)]) lins.push_back(lin + 1);
    if (r + 1 < H && !blocked[static_cast<std::size_t>(lin + W)]) lins.push_back(lin + W);
    std::sort(lins.begin(), lins.end());
    for (int nl : lins) neighbors[ci].push_back(cell_index[nl]);
  }

  // Free cells must be mutually reachable.
  {
    std::vector<char> seen(static_cast<std::size_t>(C), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      const int ci = q.front();
      q.pop();
      for (int nj : neighbors[ci]) {
        if (!seen[nj]) {
          seen[nj] = 1;
          ++count;
          q.push(nj);
        }
      }
    }
    if (count != C) {
      throw std::invalid_argument("gen_pursuit: grid is disconnected");
    }
  }

  // Moves: stay first, then neighbors in ascending cell order.
  std::vector<std::vector<int>> moves(C);
  for (int ci = 0; ci < C; ++ci) {
    moves[ci].push_back(ci);
    for (int nj : neighbors[ci]) moves[ci].push_back(nj);
  }

  // All-pairs distances over the movement graph (Floyd–Warshall).
  const int kInf = C + 1;
  std::vector<std::vector<int>> dist(C, std::vector<int>(C, kInf));
  for (int i = 0; i < C; ++i) {
    dist[i][i] = 0;
    for (int nj : neighbors[i]) dist[i][nj] = 1;
  }
  for (int k = 0; k < C; ++k) {
    for (int i = 0; i < C; ++i) {
      for (int j = 0; j < C; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }

  const int n = C * C;
  const auto sid = [C](int p, int e) { return NodeId(p * C + e + 1); };
  PursuitResult result;
  result.graph = RspGraph(n);
  result.state_names.resize(static_cast<std::size_t>(n));
  RspGraph& g = result.graph;
  for (int p = 0; p < C; ++p) {
    for (int e = 0; e < C; ++e) {
      const NodeId x = sid(p, e);
      result.state_names[static_cast<std::size_t>(x.index())] =
          "p_" + cell_name(cells[p], W) + "_e_" + cell_name(cells[e], W);
      if (p == e) {
        const int u = g.add_control(x, "capture");
        g.add_arc(x, u, NodeId::destination(), Rational(0));
        continue;
      }
      for (int q : moves[p]) {
        const int u = g.add_control(x, move_name(cells[p], cells[q], W));
        if (q == e) {
          g.add_arc(x, u, NodeId::destination(), Rational(1));
          continue;
        }
        for (int e2 : moves[e]) g.add_arc(x, u, sid(q, e2), Rational(1));
      }
    }
  }

  result.base = Policy::uniform(n);
  for (int p = 0; p < C; ++p) {
    for (int e = 0; e < C; ++e) {
      if (p == e) continue;
      int best_u = 0;
      int best_d = dist[moves[p][0]][e];
      for (int u = 1; u < static_cast<int>(moves[p].size()); ++u) {
        const int d = dist[moves[p][u]][e];
        if (d < best_d) {
          best_d = d;
          best_u = u;
        }
      }
      result.base.set_choice(sid(p, e), best_u);
    }
  }

  const TerminationReachability reach = proper_policy_exists(g);
  for (int i = 0; i < n; ++i) {
    if (!reach.forcible[static_cast<std::size_t>(i)]) {
      result.non_forcible.push_back(NodeId(i + 1));
    }
  }
  return result;
}

}  // namespace rsp
