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

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revroute/errors.hpp"
#include "revroute/experiments.hpp"
#include "revroute/oracle.hpp"
#include "revroute/path_algorithms.hpp"
#include "revroute/serialization.hpp"
#include "revroute/token_tree.hpp"

namespace {

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw revroute::InvalidInput("cannot write file: " + path);
  out << content << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw revroute::InvalidInput("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_route(const std::string& perm_arg, const std::string& algo,
              const std::string& model_name, const std::string& out_path) {
  revroute::Permutation perm = revroute::parse_permutation_arg(perm_arg);
  revroute::CostModel model = revroute::parse_cost_model(model_name);
  revroute::Schedule schedule = revroute::run_path_algorithm(algo, perm);
  revroute::Duration cost = revroute::makespan(schedule, model);
  if (!revroute::routes(schedule, perm))
    throw revroute::VerificationError("schedule failed verification");
  std::cout << "makespan " << cost.to_string() << "\n";
  write_or_print(out_path, revroute::schedule_to_string(schedule));
  return 0;
}

int run_sort_bits(const std::string& bits_arg, const std::string& algo) {
  revroute::Bits bits = revroute::parse_bits(bits_arg);
  std::vector<revroute::PathReversal> reversals;
  if (algo == "tbs") {
    reversals = revroute::tbs(bits);
  } else if (algo == "atbs") {
    reversals = revroute::atbs(bits);
  } else {
    throw revroute::InvalidInput("unknown bit sorter: " + algo);
  }
  revroute::Bits work = bits;
  revroute::Schedule schedule;
  schedule.n = static_cast<int>(bits.size());
  std::string listing = "[";
  for (const revroute::PathReversal& r : reversals) {
    std::reverse(work.begin() + r.lo, work.begin() + r.hi + 1);
    if (listing.size() > 1) listing += ",";
    listing += "(" + std::to_string(r.lo) + "," + std::to_string(r.hi) + ")";
    schedule.ops.emplace_back(r);
  }
  listing += "]";
  if (!revroute::bits_sorted(work))
    throw revroute::VerificationError("reversals failed to sort the bits");
  revroute::Duration cost =
      revroute::makespan(schedule, revroute::CostModel::linear_third);
  std::cout << listing << "\n";
  std::cout << "cost " << cost.to_string() << "\n";
  return 0;
}

int run_graph_route(const std::string& graph_arg, const std::string& perm_arg,
                    const std::string& out_path) {
  revroute::Graph g = revroute::load_graph_arg(graph_arg);
  revroute::Permutation perm = revroute::parse_permutation_arg(perm_arg);
  revroute::Schedule schedule = revroute::route_sparse_general(g, perm);
  revroute::Duration cost =
      revroute::makespan(schedule, revroute::CostModel::linear_third);
  if (!revroute::routes(schedule, perm))
    throw revroute::VerificationError("schedule failed verification");
  std::cout << "makespan " << cost.to_string() << "\n";
  write_or_print(out_path, revroute::schedule_to_string(schedule));
  return 0;
}

int run_sweep(const std::string& algo, const std::vector<int>& sizes,
              int trials, std::uint64_t seed, const std::string& model_name,
              const std::string& out_path) {
  revroute::CostModel model = revroute::parse_cost_model(model_name);
  std::vector<int> grid =
      sizes.empty() ? revroute::default_grid(algo) : sizes;
  std::vector<revroute::SweepRow> rows =
      revroute::sweep(algo, grid, trials, seed, model);
  std::string csv = revroute::sweep_csv(rows);
  if (out_path.empty()) {
    std::cout << csv;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw revroute::InvalidInput("cannot write file: " + out_path);
  out << csv;
  return 0;
}

int run_fit(const std::string& in_path, bool variance,
            const std::string& out_path) {
  std::vector<revroute::SweepRow> rows =
      revroute::parse_sweep_csv(read_file(in_path));
  if (rows.size() < 3)
    throw revroute::InvalidInput("fit needs at least three sweep rows");
  std::vector<std::pair<int, double>> points;
  points.reserve(rows.size());
  for (const revroute::SweepRow& row : rows)
    points.emplace_back(row.n, variance ? row.stddev : row.mean);
  revroute::FitResult fit =
      variance ? revroute::fit_variance(points) : revroute::fit_mean(points);
  write_or_print(out_path, revroute::fit_json(fit));
  return 0;
}

int run_verify(int n, const std::string& algo, const std::string& model_name,
               int workers) {
  revroute::CostModel model = revroute::parse_cost_model(model_name);
  revroute::ExhaustiveReport report = revroute::exhaustive_verify(
      n,
      [&algo](const revroute::Permutation& p) {
        return revroute::run_path_algorithm(algo, p);
      },
      model, workers);

  bool phi_ok = true;
  for (int m = 2; m <= std::min(n, 8); ++m)
    for (int k = 1; k < m; ++k)
      if (std::log(static_cast<double>(revroute::ball_size(k, m))) >
          revroute::log_phi(k, m) + 1e-9)
        phi_ok = false;

  nlohmann::json j{{"algorithm", algo},
                   {"n", n},
                   {"count", report.count},
                   {"all_correct", report.all_correct},
                   {"max_cost", report.max_cost.to_string()},
                   {"mean_cost", report.mean_cost},
                   {"argmax", revroute::to_json(report.argmax)},
                   {"ball_bound_ok", phi_ok}};
  if (report.first_failure)
    j["first_failure"] = revroute::to_json(*report.first_failure);
  std::cout << j.dump() << "\n";
  return report.all_correct && phi_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Token routing by reversals and matchings"};
  app.require_subcommand(1);

  std::string route_perm, route_algo = "gdc-tbs", route_model = "linear";
  std::string route_out;
  CLI::App* route_cmd =
      app.add_subcommand("route", "Route a permutation on the path");
  route_cmd->add_option("--perm", route_perm, "permutation JSON or file")
      ->required();
  route_cmd->add_option("--algo", route_algo,
                        "oes | gdc-tbs | gdc-atbs | middle-exchange");
  route_cmd->add_option("--model", route_model, "linear | sqrt | unit");
  route_cmd->add_option("--out", route_out, "schedule JSON output file");

  std::string bits_arg, bits_algo = "tbs";
  CLI::App* sort_cmd =
      app.add_subcommand("sort-bits", "Sort a binary string by reversals");
  sort_cmd->add_option("--bits", bits_arg, "string over {0,1}")->required();
  sort_cmd->add_option("--algo", bits_algo, "tbs | atbs");

  std::string graph_arg, graph_perm, graph_out;
  CLI::App* graph_cmd = app.add_subcommand(
      "graph-route", "Route a sparse permutation on a graph");
  graph_cmd->add_option("--graph", graph_arg, "edge-list file or grid:RxC")
      ->required();
  graph_cmd->add_option("--perm", graph_perm, "permutation JSON or file")
      ->required();
  graph_cmd->add_option("--out", graph_out, "schedule JSON output file");

  std::string sweep_algo, sweep_model = "linear", sweep_out;
  std::vector<int> sweep_sizes;
  int sweep_trials = 1000;
  std::uint64_t sweep_seed = 0;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Makespan statistics over random inputs");
  sweep_cmd->add_option("--algo", sweep_algo, "routing algorithm")
      ->required();
  sweep_cmd->add_option("--trials", sweep_trials, "samples per size");
  sweep_cmd->add_option("--seed", sweep_seed, "PRNG seed")->required();
  sweep_cmd->add_option("--n", sweep_sizes,
                        "sizes (default: built-in grid for the algorithm)");
  sweep_cmd->add_option("--model", sweep_model, "linear | sqrt | unit");
  sweep_cmd->add_option("--out", sweep_out, "CSV output file");

  std::string fit_in, fit_out;
  bool fit_dev = false;
  CLI::App* fit_cmd =
      app.add_subcommand("fit", "Least-squares fit of a sweep CSV");
  fit_cmd->add_option("--in", fit_in, "sweep CSV file")->required();
  fit_cmd->add_flag("--variance", fit_dev,
                    "fit the variance instead of the mean");
  fit_cmd->add_option("--out", fit_out, "JSON output file");

  int verify_n = 6, verify_workers = 0;
  std::string verify_algo = "gdc-tbs", verify_model = "linear";
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Exhaustive correctness and ball-bound cross-checks");
  verify_cmd->add_option("--n", verify_n, "exhaustive size");
  verify_cmd->add_option("--algo", verify_algo, "routing algorithm");
  verify_cmd->add_option("--model", verify_model, "linear | sqrt | unit");
  verify_cmd->add_option("--workers", verify_workers,
                         "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (route_cmd->parsed())
      return run_route(route_perm, route_algo, route_model, route_out);
    if (sort_cmd->parsed()) return run_sort_bits(bits_arg, bits_algo);
    if (graph_cmd->parsed())
      return run_graph_route(graph_arg, graph_perm, graph_out);
    if (sweep_cmd->parsed())
      return run_sweep(sweep_algo, sweep_sizes, sweep_trials, sweep_seed,
                       sweep_model, sweep_out);
    if (fit_cmd->parsed()) return run_fit(fit_in, fit_dev, fit_out);
    if (verify_cmd->parsed())
      return run_verify(verify_n, verify_algo, verify_model, verify_workers);
  } catch (const revroute::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const revroute::VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
