// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exit-code and output-determinism contract of the mwlab binary, exercised
// through real process invocations.

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "mwlab/catalog_io.hpp"
#include "mwlab/mw.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(MWLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "mwlab_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = temp_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

}  // namespace

TEST_CASE("cli check") {
  const std::string u24 = write_temp("u24.matroid", mwlab::write_matroid(mwlab::Matroid::uniform(2, 4)));
  const RunResult r = run_cli("check " + u24);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("margin 4\n") != std::string::npos);
  CHECK(r.out.find("t20 8\n") != std::string::npos);

  const std::string k4 = write_temp(
      "k4.graph", mwlab::write_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  const RunResult rk = run_cli("check " + k4);
  CHECK(rk.exit_code == 0);
  CHECK(rk.out.find("margin 16\n") != std::string::npos);

  const std::string u12sum = write_temp(
      "u12sum.matroid",
      mwlab::write_matroid(direct_sum(mwlab::Matroid::uniform(1, 2), mwlab::Matroid::uniform(1, 2))));
  const RunResult rs = run_cli("check " + u12sum);
  CHECK(rs.exit_code == 0);
  CHECK(rs.out.find("margin 0\n") != std::string::npos);
  CHECK(rs.out.find("u12_sum 1\n") != std::string::npos);

  CHECK(run_cli("check /no/such/file.matroid").exit_code == 1);
  const std::string bad = write_temp("bad.matroid", "MATROID 1\nn 4\nr 2\nbases 2\n0 1\n2 3\n");
  CHECK(run_cli("check " + bad).exit_code == 1);

  // ground-set cap from the environment
  CHECK(run_cli("check " + u24, "MWLAB_MAX_N=3").exit_code == 1);
  CHECK(run_cli("check " + u24, "MWLAB_MAX_N=10").exit_code == 0);
}

TEST_CASE("cli tutte") {
  const std::string u24 = write_temp("u24b.matroid", mwlab::write_matroid(mwlab::Matroid::uniform(2, 4)));
  const RunResult grid = run_cli("tutte " + u24);
  CHECK(grid.exit_code == 0);
  CHECK(grid.out.find("engines_agree 1\n") != std::string::npos);
  CHECK(grid.out.find("t 2 0 1\n") != std::string::npos);
  CHECK(grid.out.find("t 0 1 2\n") != std::string::npos);

  const RunResult eval = run_cli("tutte " + u24 + " --eval 2 2");
  CHECK(eval.exit_code == 0);
  CHECK(eval.out == "16\n");

  const std::string u12 = write_temp("u12.matroid", mwlab::write_matroid(mwlab::Matroid::uniform(1, 2)));
  const RunResult eval11 = run_cli("tutte " + u12 + " --eval 1 1");
  CHECK(eval11.out == "2\n");
}

TEST_CASE("cli bounds") {
  const RunResult nr = run_cli("bounds nr-table --max-r 16");
  CHECK(nr.exit_code == 0);  // disagreements never fail the nr-table run
  CHECK(nr.out.find("r=1 paper=4 oracle=4") != std::string::npos);
  CHECK(nr.out.find("r=5 paper=21 oracle=20") != std::string::npos);
  CHECK(nr.out.find("agree=MISMATCH") != std::string::npos);
  CHECK(nr.out.find("r=4 paper=16 oracle=16 threshold=12 agree=ok oracle_le_threshold=NO") !=
        std::string::npos);

  const RunResult ident = run_cli("bounds identity --max-r 64");
  CHECK(ident.exit_code == 0);
  CHECK(ident.out.find("r=4 sum=64 pow=64 ok\n") != std::string::npos);

  const RunResult log_spot = run_cli("bounds log-ineq --x 65536");
  CHECK(log_spot.exit_code == 0);
  CHECK(log_spot.out.find("lhs=64 rhs=23 ok") != std::string::npos);

  // x below the claimed regime may fail the inequality without failing the run
  const RunResult log4 = run_cli("bounds log-ineq --x 4");
  CHECK(log4.exit_code == 0);
  CHECK(log4.out.find("FAIL") != std::string::npos);

  const RunResult chain = run_cli("bounds chain forward-diff --n 8 --r 2");
  CHECK(chain.exit_code == 0);
  CHECK(chain.out.find("overall 1\n") != std::string::npos);

  const RunResult dens = run_cli("bounds chain density --n 112 --r 16");
  CHECK(dens.exit_code == 0);
  CHECK(dens.out.find("overall 1\n") != std::string::npos);
  CHECK(dens.out.find("exact 0") != std::string::npos);  // the log-tower steps

  // matroid-backed chains read a file
  const std::string u24 = write_temp("u24c.matroid", mwlab::write_matroid(mwlab::Matroid::uniform(2, 4)));
  const RunResult cocirc = run_cli("bounds chain cocircuit --input " + u24);
  CHECK(cocirc.exit_code == 0);
  CHECK(cocirc.out.find("overall 0\n") != std::string::npos);  // step (c) fails
  CHECK(cocirc.out.find("lhs 8 rhs 12") != std::string::npos);
  CHECK(run_cli("bounds chain loops --input " + u24).exit_code == 1);  // no loops
  CHECK(run_cli("bounds chain cocircuit").exit_code == 1);             // missing --input
  CHECK(run_cli("bounds chain bogus --n 1 --r 1").exit_code == 1);

  // hypothesis failures are usage errors
  CHECK(run_cli("bounds chain density --n 25 --r 6").exit_code == 1);
  CHECK(run_cli("bounds chain forward-diff --n 4 --r 2").exit_code == 1);
  CHECK(run_cli("bounds nr-table --max-r 0").exit_code == 1);
}

TEST_CASE("cli sweep") {
  // a small config keeps this fast; determinism must hold across --jobs
  const std::string config = write_temp("small.sweep",
                                        "SWEEP 1\n"
                                        "cap_n 7\n"
                                        "cap_bases 1000\n"
                                        "uniform 1 3 2 6\n"
                                        "graphic_builtin K4\n"
                                        "dualize 1\n"
                                        "sum_pairs 1\n"
                                        "add_loops upto_rank\n");
  const RunResult one = run_cli("sweep " + config + " --jobs 1");
  const RunResult four = run_cli("sweep " + config + " --jobs 4");
  CHECK(one.exit_code == 0);
  CHECK(four.exit_code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out.find("violations 0\n") != std::string::npos);

  // the injected-violation hook drives exit code 2
  const std::string inject = write_temp("inject.sweep",
                                        "SWEEP 1\n"
                                        "uniform 1 1 2 3\n"
                                        "debug_inject_violation 1\n");
  const RunResult forced = run_cli("sweep " + inject);
  CHECK(forced.exit_code == 2);
  CHECK(forced.out.find("violations 1\n") != std::string::npos);
  CHECK(forced.out.find("injected 1\n") != std::string::npos);

  CHECK(run_cli("sweep /no/such/config.sweep").exit_code == 1);
  const std::string bad = write_temp("bad.sweep", "SWEEP 1\nbogus clause\n");
  CHECK(run_cli("sweep " + bad).exit_code == 1);
}

TEST_CASE("cli usage") {
  CHECK(run_cli("").exit_code != 0);
  CHECK(run_cli("frobnicate").exit_code != 0);
  const RunResult out_file = run_cli("bounds identity --max-r 4 --out " +
                                     (temp_dir() / "id.txt").string());
  CHECK(out_file.exit_code == 0);
  std::ifstream in(temp_dir() / "id.txt");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("r=4 sum=64 pow=64 ok\n") != std::string::npos);
}
