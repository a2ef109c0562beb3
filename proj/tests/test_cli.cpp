// Copyright 2026 The revroute Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "revroute/schedule.hpp"
#include "revroute/serialization.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("revroute_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

CliResult run_cli(const std::string& args) {
  fs::path out_path = work_dir() / "stdout.txt";
  fs::path err_path = work_dir() / "stderr.txt";
  std::string cmd = std::string(REVROUTE_CLI_PATH) + " " + args + " > " +
                    out_path.string() + " 2> " + err_path.string();
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CliResult{code, slurp(out_path), slurp(err_path)};
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("route happy paths") {
  CliResult id = run_cli("route --perm \"[0,1,2]\"");
  CHECK(id.exit_code == 0);
  CHECK(first_line(id.out) == "makespan 0");

  CliResult swap = run_cli("route --perm \"[1,0]\" --algo oes --model unit");
  CHECK(swap.exit_code == 0);
  CHECK(first_line(swap.out) == "makespan 1");

  CliResult rev = run_cli("route --perm \"[3,2,1,0]\" --algo gdc-tbs");
  CHECK(rev.exit_code == 0);
  CHECK(first_line(rev.out) == "makespan 5/3");

  CliResult sq = run_cli("route --perm \"[2,1,0]\" --algo gdc-tbs"
                         " --model sqrt");
  CHECK(sq.exit_code == 0);
  // sqrt model durations print as 12 significant digit decimals.
  CHECK(first_line(sq.out).find('/') == std::string::npos);
  CHECK(first_line(sq.out).find('.') != std::string::npos);
}

TEST_CASE("route writes a checkable schedule") {
  fs::path out = work_dir() / "schedule.json";
  CliResult r = run_cli("route --perm \"[2,0,1]\" --algo gdc-atbs --out " +
                        out.string());
  REQUIRE(r.exit_code == 0);
  revroute::Schedule s = revroute::schedule_from_string(slurp(out));
  CHECK(revroute::routes(s, revroute::Permutation{{2, 0, 1}}));
}

TEST_CASE("route rejects bad input") {
  CHECK(run_cli("route --perm \"[0,0,1]\"").exit_code == 2);
  CHECK(run_cli("route --perm \"[1,0\"").exit_code == 2);
  CHECK(run_cli("route --perm \"[1,0]\" --algo sleepsort").exit_code == 2);
  CHECK(run_cli("route --perm \"[3,2,1,0]\" --model unit").exit_code == 2);
  CHECK(run_cli("route").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("sort-bits anchors") {
  CliResult sorted = run_cli("sort-bits --bits 0001");
  CHECK(sorted.exit_code == 0);
  CHECK(sorted.out == "[]\ncost 0\n");

  CliResult swap = run_cli("sort-bits --bits 10");
  CHECK(swap.exit_code == 0);
  CHECK(swap.out == "[(0,1)]\ncost 1\n");

  CliResult wide = run_cli("sort-bits --bits 010011100011010011110111001");
  CHECK(wide.exit_code == 0);
  CHECK(first_line(wide.out).find("(5,20)]") != std::string::npos);

  CliResult adaptive =
      run_cli("sort-bits --bits 11001001 --algo atbs");
  CHECK(adaptive.exit_code == 0);

  CHECK(run_cli("sort-bits --bits 012").exit_code == 2);
  CHECK(run_cli("sort-bits --bits 10 --algo quick").exit_code == 2);
}

TEST_CASE("graph-route on grids and files") {
  std::string identity25 = "[";
  for (int i = 0; i < 25; ++i)
    identity25 += (i ? "," : "") + std::to_string(i);
  identity25 += "]";
  CliResult id = run_cli("graph-route --graph grid:5x5 --perm \"" +
                         identity25 + "\"");
  CHECK(id.exit_code == 0);
  CHECK(first_line(id.out) == "makespan 0");

  fs::path out = work_dir() / "grid_schedule.json";
  CliResult gr = run_cli("graph-route --graph grid:3x3 --perm "
                         "\"[1,0,2,3,4,5,6,7,8]\" --out " + out.string());
  REQUIRE(gr.exit_code == 0);
  revroute::Schedule s = revroute::schedule_from_string(slurp(out));
  CHECK(revroute::routes(
      s, revroute::Permutation{{1, 0, 2, 3, 4, 5, 6, 7, 8}}));

  fs::path edges = work_dir() / "path3.txt";
  spit(edges, "3\n0 1\n1 2\n");
  CliResult file = run_cli("graph-route --graph " + edges.string() +
                           " --perm \"[2,1,0]\"");
  CHECK(file.exit_code == 0);

  fs::path split = work_dir() / "split.txt";
  spit(split, "4\n0 1\n2 3\n");
  CHECK(run_cli("graph-route --graph " + split.string() +
                " --perm \"[1,0,3,2]\"").exit_code == 2);
  CHECK(run_cli("graph-route --graph grid:0x2 --perm \"[0]\"").exit_code ==
        2);
}

TEST_CASE("sweep is reproducible from the command line") {
  fs::path a = work_dir() / "sweep_a.csv";
  fs::path b = work_dir() / "sweep_b.csv";
  std::string base = "sweep --algo oes --n 8 --n 12 --trials 40 --seed 3";
  CHECK(run_cli(base + " --out " + a.string()).exit_code == 0);
  CHECK(run_cli(base + " --out " + b.string()).exit_code == 0);
  std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.rfind("algorithm,n,trials,seed,mean,std,min,max\n", 0) == 0);

  // Size 8 is below the enumeration cutoff, so the trials column reports
  // the group order.
  CHECK(text.find("oes,8,40320,3,") != std::string::npos);

  CHECK(run_cli("sweep --algo oes --n 8 --trials 5").exit_code == 2);
  CHECK(run_cli("sweep --algo mystery --n 8 --trials 5 --seed 1")
            .exit_code == 2);
}

TEST_CASE("fit reads a sweep csv") {
  fs::path csv = work_dir() / "fit_in.csv";
  std::ostringstream rows;
  rows << "algorithm,n,trials,seed,mean,std,min,max\n";
  for (int n : {16, 36, 64, 100, 144})
    rows << "oes," << n << ",10,1," << (2.0 * n + 5.0) << ",0,0,0\n";
  spit(csv, rows.str());

  fs::path out = work_dir() / "fit.json";
  CliResult r = run_cli("fit --in " + csv.string() + " --out " +
                        out.string());
  REQUIRE(r.exit_code == 0);
  std::string json = slurp(out);
  CHECK(json.find("\"a\":") != std::string::npos);
  CHECK(json.find("\"r_squared\":") != std::string::npos);

  CHECK(run_cli("fit --in /nonexistent.csv").exit_code == 2);
  fs::path bad = work_dir() / "bad.csv";
  spit(bad, "algorithm,n\n");
  CHECK(run_cli("fit --in " + bad.string()).exit_code == 2);
}

TEST_CASE("verify exits by outcome") {
  CliResult ok = run_cli("verify --n 5 --algo gdc-atbs");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"all_correct\":true") != std::string::npos);
  CHECK(ok.out.find("\"ball_bound_ok\":true") != std::string::npos);

  CliResult sq = run_cli("verify --n 4 --algo oes --model sqrt");
  CHECK(sq.exit_code == 0);

  CHECK(run_cli("verify --n 4 --algo nonesuch").exit_code == 2);
  CHECK(run_cli("verify --n 20 --algo oes").exit_code == 2);
}
