// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool: exit codes, output format,
// and file round-trips.  Each case shells out to the installed binary.

#include <string>

#include "doctest.h"
#include "rsp/io.hpp"
#include "test_util.hpp"

namespace {

using namespace rsp;
using namespace rsp::testing;

std::string cli() {
#ifdef RSP_CLI_PATH
  return RSP_CLI_PATH;
#else
  return "rsp";
#endif
}

std::string q(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate: exit 0 / 1 / 2") {
  auto ok = run_command(cli() + " validate " + q(fixture_path("layered4.rsp")));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("ok: 4 nodes") != std::string::npos);

  auto parse = run_command(cli() + " validate " +
                           q(fixture_path("bad_syntax.rsp")));
  CHECK(parse.exit_code == 1);
  CHECK(parse.err.find("error:") != std::string::npos);

  auto sem = run_command(cli() + " validate " +
                         q(fixture_path("bad_semantics.rsp")));
  CHECK(sem.exit_code == 2);
  CHECK(sem.err.find("validation:") != std::string::npos);

  auto missing = run_command(cli() + " validate /nonexistent/file.rsp");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("solve vi: the stop-or-positive-loop file costs 1") {
  auto r = run_command(cli() + " solve " +
                       q(fixture_path("loop_or_stop_a2.rsp")) + " --algo vi");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# cost\n1 1\n") != std::string::npos);
  CHECK(r.out.find("# policy\n1 ubar\n") != std::string::npos);
  CHECK(r.out.find("certificate policy_fixed_point=ok") != std::string::npos);
}

TEST_CASE("solve perturb: zero-length cycle priced at its stop cost") {
  auto r = run_command(cli() + " solve " + q(fixture_path("zero_cycle.rsp")) +
                       " --algo perturb");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# cost\n1 1\n") != std::string::npos);
  CHECK(r.out.find("# policy\n1 stop\n") != std::string::npos);
}

TEST_CASE("solve vi: negative self-loop detected as a violated assumption") {
  auto r = run_command(cli() + " solve " +
                       q(fixture_path("negative_self.rsp")) + " --algo vi");
  CHECK(r.exit_code == 4);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("solve vi: regular but unreachable destination reports +inf") {
  auto r = run_command(cli() + " solve " +
                       q(fixture_path("loop_or_finish_pos.rsp")) +
                       " --algo vi");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# cost\n1 inf\n") != std::string::npos);
}

TEST_CASE("solve: algorithms that need a terminating policy exit 3 without one") {
  for (const char* algo : {"pi", "pi-async", "perturb"}) {
    auto r = run_command(cli() + " solve " +
                         q(fixture_path("loop_or_finish_pos.rsp")) +
                         " --algo " + algo);
    CHECK(r.exit_code == 3);
  }
}

TEST_CASE("solve dijkstra: negative lengths are a precondition failure") {
  auto r = run_command(cli() + " solve " +
                       q(fixture_path("negative_self.rsp")) +
                       " --algo dijkstra");
  CHECK(r.exit_code == 4);
}

TEST_CASE("solve: every algorithm agrees on the layered file") {
  const std::string expect_cost = "# cost\n1 3\n2 6\n3 5\n4 4\n";
  for (const char* algo : {"vi", "vi-async", "pi", "pi-async", "dijkstra"}) {
    auto r = run_command(cli() + " solve " + q(fixture_path("layered4.rsp")) +
                         " --algo " + algo + " --seed 7");
    CAPTURE(algo);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(expect_cost) != std::string::npos);
  }
}

TEST_CASE("solve: --cost-out / --policy-out round-trip through --init file:") {
  const std::string cost_path = "/tmp/rsp_cli_cost.txt";
  const std::string policy_path = "/tmp/rsp_cli_policy.txt";
  auto first = run_command(cli() + " solve " + q(fixture_path("layered4.rsp")) +
                           " --algo vi --cost-out " + cost_path +
                           " --policy-out " + policy_path);
  REQUIRE(first.exit_code == 0);
  CHECK(slurp(cost_path) == "1 3\n2 6\n3 5\n4 4\n");
  CHECK(slurp(policy_path) == "1 a\n2 a\n3 a\n4 a\n");

  // Re-solving from the solution vector converges immediately to the same
  // answer.
  auto again = run_command(cli() + " solve " + q(fixture_path("layered4.rsp")) +
                           " --algo vi --init file:" + cost_path);
  CHECK(again.exit_code == 0);
  CHECK(again.out.find("# cost\n1 3\n2 6\n3 5\n4 4\n") != std::string::npos);
  CHECK(again.out.find("# iterations 1\n") != std::string::npos);
}

TEST_CASE("solve: unknown algorithm is a usage error") {
  auto r = run_command(cli() + " solve " + q(fixture_path("layered4.rsp")) +
                       " --algo simplex");
  CHECK(r.exit_code == 1);
}

TEST_CASE("oracle: stop-or-free-loop table") {
  auto r = run_command(cli() + " oracle " + q(fixture_path("loop_or_stop.rsp")));
  CHECK(r.exit_code == 0);
  // Two one-node policies: loop forever (improper, regular, cost 0) and stop
  // (proper, cost 1).
  CHECK(r.out.find("u | improper | irregular | (0)") != std::string::npos);
  CHECK(r.out.find("ubar | proper | regular | (1)") != std::string::npos);
  CHECK(r.out.find("j_star 1 0") != std::string::npos);
  CHECK(r.out.find("j_hat 1 1") != std::string::npos);
}

TEST_CASE("oracle: positive loop has no terminating policy") {
  auto r = run_command(cli() + " oracle " +
                       q(fixture_path("loop_or_finish_pos.rsp")));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("u | improper | irregular | (inf)") != std::string::npos);
  CHECK(r.out.find("j_star 1 inf") != std::string::npos);
  CHECK(r.out.find("j_hat none") != std::string::npos);
}

TEST_CASE("oracle: policy cap exceeded exits 5") {
  auto r = run_command(cli() + " oracle " + q(fixture_path("layered4.rsp")) +
                       " --cap 10");
  CHECK(r.exit_code == 5);
}

TEST_CASE("bench: agreement run with CSV output") {
  const std::string spec_path = "/tmp/rsp_cli_bench.spec";
  const std::string csv_path = "/tmp/rsp_cli_bench.csv";
  write_file(spec_path,
             "rspbench 1\n"
             "gen 5 4 strong\n"
             "gen 6 4 nonneg-lengths\n"
             "gen 7 3 nonneg-cycles   # routed to the perturbation solver\n"
             "gen-search 8 4\n"
             "file " + fixture_path("layered4.rsp") + "\n");
  auto r = run_command(cli() + " bench " + spec_path + " --csv " + csv_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("agree=NO") == std::string::npos);
  const std::string csv = slurp(csv_path);
  CHECK(csv.rfind("instance,algorithm,iterations,time_ms,agree\n", 0) == 0);
  CHECK(csv.find("dijkstra") != std::string::npos);   // nonneg instance
  CHECK(csv.find("perturb") != std::string::npos);    // weak-regime instance
  CHECK(csv.find(",false") == std::string::npos);
}

TEST_CASE("bench: malformed spec exits 1") {
  const std::string spec_path = "/tmp/rsp_cli_bench_bad.spec";
  write_file(spec_path, "not-a-bench-file\n");
  auto r = run_command(cli() + " bench " + spec_path);
  CHECK(r.exit_code == 1);
}

TEST_CASE("gen random: deterministic and parseable") {
  auto a = run_command(cli() + " gen random --seed 11 --nodes 4 --target strong");
  auto b = run_command(cli() + " gen random --seed 11 --nodes 4 --target strong");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("rsp 1\n", 0) == 0);

  const std::string out_path = "/tmp/rsp_cli_gen.rsp";
  auto c = run_command(cli() + " gen random --seed 11 --nodes 4 --target strong --out " +
                       out_path);
  CHECK(c.exit_code == 0);
  CHECK(slurp(out_path) == a.out);
  // The written file solves cleanly.
  auto solved = run_command(cli() + " solve " + out_path + " --algo pi");
  CHECK(solved.exit_code == 0);
}

TEST_CASE("gen search and gen pursuit: smoke") {
  auto s = run_command(cli() + " gen search --seed 2 --nodes 3");
  CHECK(s.exit_code == 0);
  CHECK(s.out.rfind("rsp 1\n", 0) == 0);

  const std::string grid_path = "/tmp/rsp_cli_grid.rsp";
  const std::string base_path = "/tmp/rsp_cli_grid_base.policy";
  auto p = run_command(cli() + " gen pursuit --width 3 --height 1 --out " +
                       grid_path + " --base-out " + base_path);
  CHECK(p.exit_code == 0);
  auto solved = run_command(cli() + " solve " + grid_path + " --algo vi");
  CHECK(solved.exit_code == 0);
  CHECK(!slurp(base_path).empty());
}

}  // TEST_SUITE("cli")
