// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: validate / solve / oracle / bench / gen.
//
// Exit codes (stable):
//   0  success
//   1  parse error (unreadable or syntactically malformed input)
//   2  structural validation failure
//   3  no terminating policy where one is required
//   4  algorithm precondition or certificate failure detected mid-run
//   5  policy enumeration cap exceeded
//   6  cross-algorithm disagreement in the bench harness

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsp/bellman.hpp"
#include "rsp/dijkstra.hpp"
#include "rsp/errors.hpp"
#include "rsp/generators.hpp"
#include "rsp/io.hpp"
#include "rsp/oracle.hpp"
#include "rsp/perturbation.hpp"
#include "rsp/policy_analysis.hpp"
#include "rsp/policy_eval.hpp"
#include "rsp/policy_iteration.hpp"
#include "rsp/rational.hpp"
#include "rsp/schedule.hpp"
#include "rsp/value_iteration.hpp"

namespace {

using namespace rsp;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNoProperPolicy = 3;
constexpr int kExitAssumption = 4;
constexpr int kExitEnumerationCap = 5;
constexpr int kExitDisagreement = 6;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

/// Loads and structurally validates; prints diagnostics and returns the graph
/// or an exit code.
std::optional<RspGraph> load_checked(const std::string& path, int& exit_code) {
  GraphReadResult r = read_graph_file(path);
  if (!r.report.ok()) {
    for (const std::string& v : r.report.violations)
      std::cerr << "validation: " << v << "\n";
    exit_code = kExitValidation;
    return std::nullopt;
  }
  return std::move(r.graph);
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path) {
  GraphReadResult r = read_graph_file(path);
  if (!r.report.ok()) {
    for (const std::string& v : r.report.violations)
      std::cerr << "validation: " << v << "\n";
    return kExitValidation;
  }
  const RspGraph& g = r.graph;
  std::cout << "ok: " << g.num_nodes() << " nodes, " << g.num_arcs()
            << " arcs\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveFlags {
  std::string algo = "vi";
  std::string init = "inf";
  std::string tol;
  std::string delta = "1";
  std::string shrink = "1/4";
  int rounds = 20;
  std::uint64_t seed = 0;
  int partition = 0;  // 0 = one node per block
  long long events = 1000000;
  std::string cost_out;
  std::string policy_out;
};

CostVector parse_init(const SolveFlags& f, int n) {
  if (f.init == "inf") return CostVector::infinite(n);
  if (f.init == "zero") return CostVector::zero(n);
  if (f.init.rfind("file:", 0) == 0)
    return read_cost_vector_file(f.init.substr(5), n);
  throw CLI::ValidationError("--init must be inf, zero, or file:PATH");
}

Schedule make_schedule(const RspGraph& g, const SolveFlags& f) {
  const int n = g.num_nodes();
  if (f.partition <= 0 || f.partition >= n)
    return Schedule::random_fair(n, f.seed);
  std::vector<std::vector<NodeId>> blocks(f.partition);
  for (int i = 1; i <= n; ++i)
    blocks[(i - 1) % f.partition].push_back(NodeId(i));
  return Schedule::random_fair_blocks(blocks, f.seed);
}

struct SolveOutcome {
  CostVector cost;
  Policy policy;
  long long iterations = 0;
};

SolveOutcome dispatch_solve(const RspGraph& g, const SolveFlags& f) {
  SolveOutcome out;
  if (f.algo == "vi") {
    ViOptions opts;
    if (!f.tol.empty()) opts.tol = parse_rational(f.tol);
    ViResult r;
    if (f.init == "inf") {
      r = vi_from_infinity(g);
    } else {
      r = vi(g, parse_init(f, g.num_nodes()), opts);
      if (!r.trace.converged)
        throw AssumptionViolationError(
            "value iteration: no convergence within the sweep budget");
    }
    out = {r.cost, r.policy, r.trace.sweeps};
  } else if (f.algo == "vi-async") {
    AsyncViOptions opts;
    opts.max_events = f.events;
    ViResult r = vi_async(g, parse_init(f, g.num_nodes()), make_schedule(g, f),
                          opts);
    if (!r.trace.converged)
      throw AssumptionViolationError(
          "asynchronous value iteration: no convergence within the event "
          "budget");
    out = {r.cost, r.policy, r.trace.sweeps};
  } else if (f.algo == "pi") {
    auto mu0 = canonical_proper_policy(g);
    if (!mu0)
      throw NoProperPolicyError("policy iteration needs a terminating policy");
    PiResult r = pi_proper(g, *mu0);
    out = {r.cost, r.policy, r.trace.iterations};
  } else if (f.algo == "pi-async") {
    if (!proper_policy_exists(g).all)
      throw NoProperPolicyError(
          "asynchronous policy iteration needs a terminating policy");
    AsyncPiState st = AsyncPiState::defaults(g);
    if (f.init != "inf") {
      st.J = parse_init(f, g.num_nodes());
      st.V = st.J;
    }
    AsyncPiOptions opts;
    opts.max_events = f.events;
    AsyncPiResult r = pi_async(g, std::move(st), make_schedule(g, f), opts);
    if (!r.converged)
      throw AssumptionViolationError(
          "asynchronous policy iteration: no convergence within the event "
          "budget");
    out = {r.state.J, r.state.mu, r.events};
  } else if (f.algo == "dijkstra") {
    DijkstraResult r = dijkstra_run(g);
    out = {r.cost, r.policy, r.iterations};
  } else if (f.algo == "perturb") {
    if (!proper_policy_exists(g).all)
      throw NoProperPolicyError("perturbation needs a terminating policy");
    PerturbationOptions opts;
    opts.delta0 = parse_rational(f.delta);
    opts.shrink = parse_rational(f.shrink);
    opts.max_rounds = f.rounds;
    PerturbationResult r = solve_by_perturbation(g, opts);
    out = {r.cost, r.policy, static_cast<long long>(r.rounds.size())};
  } else {
    throw CLI::ValidationError("unknown --algo '" + f.algo + "'");
  }
  return out;
}

int cmd_solve(const std::string& path, const SolveFlags& f) {
  int ec = kExitOk;
  auto maybe = load_checked(path, ec);
  if (!maybe) return ec;
  const RspGraph& g = *maybe;

  const auto t0 = std::chrono::steady_clock::now();
  SolveOutcome out = dispatch_solve(g, f);
  const double wall = ms_since(t0);

  // Certificates: the reported values must solve their own fixed-point
  // equations before this process may report success.
  std::optional<Rational> tol;
  if (!f.tol.empty()) tol = parse_rational(f.tol);
  const bool cert_policy = verify_bellman(g, out.policy, out.cost, tol);
  const CostVector tj = apply_T(g, out.cost);
  const bool cert_fixed =
      tol ? tj.within(out.cost, *tol) : tj == out.cost;
  if (!cert_policy || !cert_fixed) {
    std::cerr << "certificate failure: policy_fixed_point="
              << (cert_policy ? "ok" : "FAIL")
              << " bellman_fixed_point=" << (cert_fixed ? "ok" : "FAIL")
              << "\n";
    return kExitAssumption;
  }

  std::cout << "# algorithm " << f.algo << "\n";
  std::cout << "# iterations " << out.iterations << "\n";
  std::cout << "# wall_ms " << wall << "\n";
  std::cout << "# certificate policy_fixed_point=ok bellman_fixed_point=ok\n";
  std::cout << "# cost\n";
  write_cost_vector(std::cout, out.cost);
  std::cout << "# policy\n";
  write_policy(std::cout, g, out.policy);

  if (!f.cost_out.empty()) {
    std::ofstream o(f.cost_out);
    write_cost_vector(o, out.cost);
  }
  if (!f.policy_out.empty()) {
    std::ofstream o(f.policy_out);
    write_policy(o, g, out.policy);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

int cmd_oracle(const std::string& path, int horizon,
               unsigned long long cap) {
  int ec = kExitOk;
  auto maybe = load_checked(path, ec);
  if (!maybe) return ec;
  const RspGraph& g = *maybe;

  OracleResult r = brute_force(g, horizon, cap);
  std::cout << "# policy | proper | regular | cost\n";
  for (const PolicyRecord& rec : r.per_policy) {
    std::string names;
    for (int x = 1; x <= g.num_nodes(); ++x) {
      if (x > 1) names += ",";
      names += g.control(NodeId(x), rec.policy.choice(NodeId(x))).name;
    }
    std::cout << names << " | " << (rec.cls.proper ? "proper" : "improper")
              << " | " << (rec.cls.regular ? "regular" : "irregular") << " | "
              << rec.cost.str() << "\n";
  }
  for (int x = 1; x <= g.num_nodes(); ++x)
    std::cout << "j_star " << x << " " << r.j_star_minimax.at(x).str() << "\n";
  if (r.j_hat) {
    for (int x = 1; x <= g.num_nodes(); ++x)
      std::cout << "j_hat " << x << " " << r.j_hat->at(x).str() << "\n";
  } else {
    std::cout << "j_hat none\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchRow {
  std::string instance;
  std::string algorithm;
  long long iterations = 0;
  double time_ms = 0;
  bool agree = true;
};

struct BenchCase {
  std::string label;
  RspGraph graph;
};

std::vector<BenchCase> read_bench_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open bench spec: " + path);
  std::vector<BenchCase> cases;
  std::string line;
  int lineno = 0;
  bool magic = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (!magic) {
      std::string version;
      if (word != "rspbench" || !(ls >> version) || version != "1")
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected magic 'rspbench 1'");
      magic = true;
      continue;
    }
    if (word == "gen") {
      GenSpec spec;
      std::string target;
      if (!(ls >> spec.seed >> spec.n_nodes >> target))
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected 'gen SEED NODES TARGET'");
      if (target == "strong") {
        spec.target = GenTarget::kProperPositiveCycles;
      } else if (target == "nonneg-cycles") {
        spec.target = GenTarget::kProperNonnegativeCycles;
        spec.require_zero_cycle = true;
      } else if (target == "nonneg-lengths") {
        spec.target = GenTarget::kNonnegativeLengths;
        spec.length_min = 0;
      } else {
        throw ParseError("line " + std::to_string(lineno) +
                         ": unknown gen target '" + target + "'");
      }
      cases.push_back({"gen:" + target + ":" + std::to_string(spec.seed),
                       gen_random(spec)});
    } else if (word == "gen-search") {
      SearchSpec spec;
      if (!(ls >> spec.seed >> spec.n_nodes))
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected 'gen-search SEED NODES'");
      cases.push_back(
          {"gen-search:" + std::to_string(spec.seed), gen_search(spec)});
    } else if (word == "file") {
      std::string p;
      if (!(ls >> p))
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected 'file PATH'");
      cases.push_back({p, load_graph_file(p)});
    } else {
      throw ParseError("line " + std::to_string(lineno) +
                       ": unknown directive '" + word + "'");
    }
  }
  if (!magic) throw ParseError("missing magic 'rspbench 1'");
  return cases;
}

int cmd_bench(const std::string& path, const std::string& csv_out) {
  std::vector<BenchCase> cases = read_bench_spec(path);
  std::vector<BenchRow> rows;
  bool all_agree = true;

  for (const BenchCase& c : cases) {
    const RspGraph& g = c.graph;
    const bool strong =
        check_assumption(g, Assumption::kProperPositiveCycles).holds;
    std::vector<std::pair<std::string, SolveFlags>> runs;
    if (strong) {
      for (const char* a : {"vi", "vi-async", "pi", "pi-async"})
        runs.push_back({a, SolveFlags{.algo = a, .init = "inf"}});
      // The async variants start from explicit finite vectors.
      runs[1].second.init = "zero";
      if (g.all_lengths_nonnegative())
        runs.push_back({"dijkstra", SolveFlags{.algo = "dijkstra"}});
    } else {
      // Weak regime: the downward limit may overshoot the terminating
      // optimum, so only the perturbation route applies.
      runs.push_back({"perturb", SolveFlags{.algo = "perturb"}});
    }

    std::optional<CostVector> first;
    for (auto& [name, flags] : runs) {
      const auto t0 = std::chrono::steady_clock::now();
      SolveOutcome out = dispatch_solve(g, flags);
      BenchRow row;
      row.instance = c.label;
      row.algorithm = name;
      row.iterations = out.iterations;
      row.time_ms = ms_since(t0);
      if (!first) {
        first = out.cost;
      } else {
        row.agree = out.cost == *first;
      }
      all_agree = all_agree && row.agree;
      rows.push_back(std::move(row));
    }
  }

  std::ostringstream csv;
  csv << "instance,algorithm,iterations,time_ms,agree\n";
  for (const BenchRow& r : rows) {
    std::cout << r.instance << "  " << r.algorithm << "  it=" << r.iterations
              << "  ms=" << r.time_ms << "  agree=" << (r.agree ? "yes" : "NO")
              << "\n";
    csv << r.instance << "," << r.algorithm << "," << r.iterations << ","
        << r.time_ms << "," << (r.agree ? "true" : "false") << "\n";
  }
  if (!csv_out.empty()) {
    std::ofstream o(csv_out);
    o << csv.str();
  }
  if (!all_agree) {
    std::cerr << "bench: algorithms disagree on at least one instance\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int write_graph_out(const RspGraph& g, const std::string& out_path) {
  if (out_path.empty()) {
    write_graph(std::cout, g);
  } else {
    std::ofstream o(out_path);
    write_graph(o, g);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust shortest path solver"};
  app.require_subcommand(1);

  // --- validate ---
  std::string v_path;
  auto* validate = app.add_subcommand("validate", "parse and check a graph file");
  validate->add_option("path", v_path, "graph file")->required();

  // --- solve ---
  std::string s_path;
  SolveFlags flags;
  auto* solve = app.add_subcommand("solve", "solve a graph file");
  solve->add_option("path", s_path, "graph file")->required();
  solve->add_option("--algo", flags.algo,
                    "vi | vi-async | pi | pi-async | dijkstra | perturb");
  solve->add_option("--init", flags.init, "inf | zero | file:PATH");
  solve->add_option("--tol", flags.tol, "tolerance (rational/decimal)");
  solve->add_option("--delta", flags.delta, "first perturbation size");
  solve->add_option("--shrink", flags.shrink, "perturbation shrink factor");
  solve->add_option("--rounds", flags.rounds, "max perturbation rounds");
  solve->add_option("--seed", flags.seed, "schedule seed (async)");
  solve->add_option("--partition", flags.partition,
                    "number of schedule blocks (async)");
  solve->add_option("--events", flags.events, "event budget (async)");
  solve->add_option("--cost-out", flags.cost_out, "write cost vector here");
  solve->add_option("--policy-out", flags.policy_out, "write policy here");

  // --- oracle ---
  std::string o_path;
  int o_horizon = 0;
  unsigned long long o_cap = kDefaultPolicyCap;
  auto* oracle = app.add_subcommand("oracle", "enumerate all policies");
  oracle->add_option("path", o_path, "graph file")->required();
  oracle->add_option("--horizon", o_horizon, "limsup evaluation horizon");
  oracle->add_option("--cap", o_cap, "policy enumeration cap");

  // --- bench ---
  std::string b_path, b_csv;
  auto* bench = app.add_subcommand("bench", "cross-check algorithm agreement");
  bench->add_option("path", b_path, "bench spec file")->required();
  bench->add_option("--csv", b_csv, "write machine-readable table here");

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "emit generated instances");
  std::string g_out;
  gen->require_subcommand(1);

  auto* gr = gen->add_subcommand("random", "random graph with a target regime");
  GenSpec gspec;
  std::string g_target = "none";
  gr->add_option("--seed", gspec.seed, "seed");
  gr->add_option("--nodes", gspec.n_nodes, "node count");
  gr->add_option("--controls", gspec.max_controls, "max controls per node");
  gr->add_option("--branch", gspec.max_branch, "max successors per control");
  gr->add_option("--min", gspec.length_min, "min length");
  gr->add_option("--max", gspec.length_max, "max length");
  gr->add_option("--target", g_target,
                 "none | strong | nonneg-cycles | nonneg-lengths");
  bool g_zero_cycle = false;
  gr->add_flag("--zero-cycle", g_zero_cycle,
               "require a zero-length improper cycle");
  gr->add_option("--out", g_out, "output file (default stdout)");

  auto* gs = gen->add_subcommand("search", "stop-or-continue search instance");
  SearchSpec sspec;
  gs->add_option("--seed", sspec.seed, "seed");
  gs->add_option("--nodes", sspec.n_nodes, "node count");
  gs->add_option("--stop-min", sspec.stop_cost_min, "min stop cost");
  gs->add_option("--stop-max", sspec.stop_cost_max, "max stop cost");
  gs->add_option("--move-min", sspec.move_cost_min, "min move cost");
  gs->add_option("--move-max", sspec.move_cost_max, "max move cost");
  gs->add_option("--out", g_out, "output file (default stdout)");

  auto* gp = gen->add_subcommand("pursuit", "grid pursuit-evasion instance");
  PursuitSpec pspec;
  std::vector<std::string> p_obstacles;
  std::string p_base_out;
  gp->add_option("--width", pspec.width, "grid width");
  gp->add_option("--height", pspec.height, "grid height");
  gp->add_option("--obstacle", p_obstacles, "blocked cell as row,col")
      ->take_all();
  gp->add_option("--base-out", p_base_out, "write the chase policy here");
  gp->add_option("--out", g_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(v_path);
    if (*solve) return cmd_solve(s_path, flags);
    if (*oracle) return cmd_oracle(o_path, o_horizon, o_cap);
    if (*bench) return cmd_bench(b_path, b_csv);
    if (*gen) {
      if (*gr) {
        if (g_target == "strong") {
          gspec.target = GenTarget::kProperPositiveCycles;
        } else if (g_target == "nonneg-cycles") {
          gspec.target = GenTarget::kProperNonnegativeCycles;
        } else if (g_target == "nonneg-lengths") {
          gspec.target = GenTarget::kNonnegativeLengths;
        } else if (g_target != "none") {
          throw CLI::ValidationError("unknown --target '" + g_target + "'");
        }
        gspec.require_zero_cycle = g_zero_cycle;
        return write_graph_out(gen_random(gspec), g_out);
      }
      if (*gs) return write_graph_out(gen_search(sspec), g_out);
      if (*gp) {
        for (const std::string& o : p_obstacles) {
          auto comma = o.find(',');
          if (comma == std::string::npos)
            throw CLI::ValidationError("--obstacle wants row,col");
          pspec.obstacles.push_back({std::stoi(o.substr(0, comma)),
                                     std::stoi(o.substr(comma + 1))});
        }
        PursuitResult p = gen_pursuit(pspec);
        if (!p.non_forcible.empty()) {
          std::cerr << "note: " << p.non_forcible.size()
                    << " states cannot force capture\n";
        }
        if (!p_base_out.empty()) {
          std::ofstream o(p_base_out);
          write_policy(o, p.graph, p.base);
        }
        return write_graph_out(p.graph, g_out);
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NoProperPolicyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoProperPolicy;
  } catch (const EnumerationCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnumerationCap;
  } catch (const AssumptionViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssumption;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    // Algorithm preconditions (negative lengths, improper starts, ...).
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssumption;
  }
  return kExitOk;
}
