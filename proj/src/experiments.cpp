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

#include "revroute/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>

#include <Eigen/Dense>
#include <boost/math/distributions/chi_squared.hpp>
#include <json.hpp>

#include "revroute/errors.hpp"
#include "revroute/labeling.hpp"
#include "revroute/path_algorithms.hpp"
#include "revroute/rng.hpp"

namespace revroute {

std::vector<SweepRow> sweep(const std::string& algorithm,
                            const std::vector<int>& n_grid, int trials,
                            std::uint64_t seed, CostModel model) {
  if (trials < 1) throw InvalidInput("sweep needs at least one trial");
  std::vector<SweepRow> rows;
  for (int n : n_grid) {
    if (n < 0) throw InvalidInput("sweep sizes must be non-negative");
    std::vector<double> costs;
    bool exhaustive = n < 12;
    if (exhaustive) {
      std::vector<int> arr(n);
      std::iota(arr.begin(), arr.end(), 0);
      do {
        Permutation perm;
        perm.dest = arr;
        costs.push_back(
            makespan(run_path_algorithm(algorithm, perm), model).to_double());
      } while (std::next_permutation(arr.begin(), arr.end()));
    } else {
      costs.reserve(trials);
      for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(t)));
        Permutation perm = random_permutation(n, rng);
        costs.push_back(
            makespan(run_path_algorithm(algorithm, perm), model).to_double());
      }
    }
    SweepRow row;
    row.algorithm = algorithm;
    row.n = n;
    row.trials = costs.size();
    row.seed = seed;
    double sum = 0.0;
    for (double c : costs) sum += c;
    row.mean = sum / static_cast<double>(costs.size());
    double squares = 0.0;
    for (double c : costs) squares += (c - row.mean) * (c - row.mean);
    if (exhaustive)
      row.stddev = std::sqrt(squares / static_cast<double>(costs.size()));
    else
      row.stddev = costs.size() > 1
                       ? std::sqrt(squares /
                                   static_cast<double>(costs.size() - 1))
                       : 0.0;
    row.min = *std::min_element(costs.begin(), costs.end());
    row.max = *std::max_element(costs.begin(), costs.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> default_grid(const std::string& algorithm) {
  std::vector<int> grid{16, 23, 32, 45, 64, 91, 128, 181, 256, 362, 512};
  if (algorithm == "gdc-atbs")
    grid.erase(std::remove_if(grid.begin(), grid.end(),
                              [](int n) { return n > 207; }),
               grid.end());
  return grid;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "algorithm,n,trials,seed,mean,std,min,max\n";
  char buf[256];
  for (const SweepRow& row : rows) {
    std::snprintf(buf, sizeof buf,
                  "%s,%d,%llu,%llu,%.17g,%.17g,%.17g,%.17g\n",
                  row.algorithm.c_str(), row.n,
                  static_cast<unsigned long long>(row.trials),
                  static_cast<unsigned long long>(row.seed), row.mean,
                  row.stddev, row.min, row.max);
    out += buf;
  }
  return out;
}

std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
  std::vector<SweepRow> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty() || line.rfind("algorithm,", 0) == 0) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 8)
      throw InvalidInput("sweep CSV rows need eight columns");
    try {
      SweepRow row;
      row.algorithm = fields[0];
      row.n = std::stoi(fields[1]);
      row.trials = std::stoull(fields[2]);
      row.seed = std::stoull(fields[3]);
      row.mean = std::stod(fields[4]);
      row.stddev = std::stod(fields[5]);
      row.min = std::stod(fields[6]);
      row.max = std::stod(fields[7]);
      rows.push_back(std::move(row));
    } catch (const std::logic_error&) {
      throw InvalidInput("malformed sweep CSV row: " + line);
    }
  }
  return rows;
}

namespace {

FitResult fit_basis(const std::vector<std::pair<int, double>>& points) {
  std::set<int> distinct;
  for (const auto& [n, y] : points) distinct.insert(n);
  if (distinct.size() < 3)
    throw VerificationError("fit needs at least three distinct sizes");

  Eigen::Matrix<long double, 3, 3> ata =
      Eigen::Matrix<long double, 3, 3>::Zero();
  Eigen::Matrix<long double, 3, 1> aty =
      Eigen::Matrix<long double, 3, 1>::Zero();
  for (const auto& [n, y] : points) {
    Eigen::Matrix<long double, 3, 1> basis;
    basis << static_cast<long double>(n),
        std::sqrt(static_cast<long double>(n)), 1.0L;
    ata += basis * basis.transpose();
    aty += basis * static_cast<long double>(y);
  }
  Eigen::FullPivLU<Eigen::Matrix<long double, 3, 3>> lu(ata);
  if (!lu.isInvertible())
    throw VerificationError("fit system is degenerate");
  Eigen::Matrix<long double, 3, 1> beta = lu.solve(aty);

  long double ybar = 0.0L;
  for (const auto& [n, y] : points) ybar += y;
  ybar /= static_cast<long double>(points.size());
  long double ss_res = 0.0L, ss_tot = 0.0L;
  for (const auto& [n, y] : points) {
    long double predicted = beta(0) * n +
                            beta(1) * std::sqrt(static_cast<long double>(n)) +
                            beta(2);
    ss_res += (y - predicted) * (y - predicted);
    ss_tot += (y - ybar) * (y - ybar);
  }
  long double r2 =
      ss_tot > 0.0L ? 1.0L - ss_res / ss_tot : (ss_res == 0.0L ? 1.0L : 0.0L);
  r2 = std::min(1.0L, std::max(0.0L, r2));

  FitResult fit;
  fit.a = static_cast<double>(beta(0));
  fit.b = static_cast<double>(beta(1));
  fit.c = static_cast<double>(beta(2));
  fit.r_squared = static_cast<double>(r2);
  return fit;
}

std::uint64_t binomial(int n, int r) {
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i)
    result = result * static_cast<std::uint64_t>(n - r + i) /
             static_cast<std::uint64_t>(i);
  return result;
}

}  // namespace

FitResult fit_mean(const std::vector<std::pair<int, double>>& points) {
  return fit_basis(points);
}

FitResult fit_variance(const std::vector<std::pair<int, double>>& points) {
  std::vector<std::pair<int, double>> squared;
  squared.reserve(points.size());
  for (const auto& [n, dev] : points) squared.emplace_back(n, dev * dev);
  return fit_basis(squared);
}

std::string fit_json(const FitResult& fit) {
  return nlohmann::json{{"a", fit.a},
                        {"b", fit.b},
                        {"c", fit.c},
                        {"r_squared", fit.r_squared}}
      .dump();
}

ChiSquareResult bitization_check(int n, int samples, std::uint64_t seed) {
  if (n <= 0 || n % 2 != 0 || n > 12)
    throw InvalidInput("bitization check needs even n between 2 and 12");
  if (samples < 1) throw InvalidInput("bitization check needs samples");
  int categories = static_cast<int>(binomial(n, n / 2));
  std::vector<int> counts(std::size_t{1} << n, 0);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Permutation perm = random_permutation(n, rng);
    Bits bits = binary_label(perm.dest, 0, n);
    unsigned mask = 0;
    for (int i = 0; i < n; ++i)
      if (bits[i]) mask |= 1u << i;
    ++counts[mask];
  }
  double expected = static_cast<double>(samples) / categories;
  double statistic = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != n / 2) continue;
    double diff = counts[mask] - expected;
    statistic += diff * diff / expected;
  }
  boost::math::chi_squared dist(categories - 1);
  double p_value = boost::math::cdf(boost::math::complement(dist, statistic));
  return ChiSquareResult{statistic, p_value, categories};
}

ExpectMaxResult expect_max_check(int n, int m, double p, int trials,
                                 std::uint64_t seed) {
  if (n < 1 || m < 1 || trials < 1)
    throw InvalidInput("expect-max check needs positive n, m, trials");
  if (p < 0.0 || p > 1.0)
    throw InvalidInput("success probability must lie in [0, 1]");
  Rng rng(seed);
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    int best = 0;
    for (int i = 0; i < m; ++i) {
      int x = 0;
      if (p == 0.0) {
        x = 0;
      } else if (p == 1.0) {
        x = n;
      } else if (p == 0.5) {
        // Fair coins come 64 at a time.
        int remaining = n;
        while (remaining >= 64) {
          x += std::popcount(rng.next_u64());
          remaining -= 64;
        }
        if (remaining > 0)
          x += std::popcount(rng.next_u64() >> (64 - remaining));
      } else {
        for (int j = 0; j < n; ++j) x += rng.bernoulli(p) ? 1 : 0;
      }
      best = std::max(best, x);
    }
    total += best;
  }
  double mean = total / trials;
  double bound =
      p * n + 2.0 * std::sqrt(n * std::log(static_cast<double>(m) * n));
  return ExpectMaxResult{mean, bound, mean <= bound};
}

std::vector<EnvelopeRow> sparse_envelope(int k, const std::vector<int>& n_grid,
                                         int trials, std::uint64_t seed) {
  if (k < 0) throw InvalidInput("mover count must be non-negative");
  if (k == 1) throw InvalidInput("no permutation moves exactly one token");
  if (trials < 1) throw InvalidInput("envelope needs at least one trial");
  std::vector<EnvelopeRow> rows;
  for (int n : n_grid) {
    if (k > n) throw InvalidInput("more movers than positions");
    EnvelopeRow row;
    row.n = n;
    if (k == 0) {
      rows.push_back(row);
      continue;
    }
    double sum = 0.0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(n),
                          static_cast<std::uint64_t>(t)));
      std::vector<int> pool(n);
      std::iota(pool.begin(), pool.end(), 0);
      for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(
                        rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
      }
      std::vector<int> movers(pool.begin(), pool.begin() + k);
      std::sort(movers.begin(), movers.end());
      Permutation action;
      bool fixed;
      do {
        action = random_permutation(k, rng);
        fixed = false;
        for (int i = 0; i < k; ++i)
          if (action.dest[i] == i) fixed = true;
      } while (fixed);
      Permutation perm = identity_permutation(n);
      for (int i = 0; i < k; ++i)
        perm.dest[movers[i]] = movers[action.dest[i]];
      double cost =
          makespan(middle_exchange(perm), CostModel::linear_third).to_double();
      double excess = cost - n / 3.0;
      sum += excess;
      worst = std::max(worst, excess);
    }
    row.mean_excess = sum / trials;
    row.max_excess = worst;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace revroute
