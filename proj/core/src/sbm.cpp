//------------------------------------------------------------------------------
//
//   Copyright 2026 The blockcluster Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "blockcluster/sbm.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "blockcluster/detail/greedy.hpp"
#include "blockcluster/detail/parallel.hpp"
#include "blockcluster/detail/partitions.hpp"
#include "blockcluster/random.hpp"

namespace blockcluster {

namespace {

constexpr double kMaxBruteForcePartitions = 1e6;

struct PairStats {
  Eigen::MatrixXd npairs;  // possible dyads per block pair
  Eigen::MatrixXd stat;    // present edges (Bernoulli) or weight sum (exponential)
};

PairStats block_pair_stats(const Eigen::MatrixXd& aff, const std::vector<int>& z, int k) {
  PairStats s;
  s.npairs = Eigen::MatrixXd::Zero(k, k);
  s.stat = Eigen::MatrixXd::Zero(k, k);
  const int n = static_cast<int>(aff.rows());
  Eigen::VectorXd cnt = Eigen::VectorXd::Zero(k);
  for (int i = 0; i < n; ++i) cnt[z[static_cast<std::size_t>(i)]] += 1.0;
  for (int i = 0; i < n; ++i) {
    const int r = z[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      const int c = z[static_cast<std::size_t>(j)];
      const double v = aff(i, j);
      if (r <= c)
        s.stat(r, c) += v;
      else
        s.stat(c, r) += v;
    }
  }
  for (int r = 0; r < k; ++r) {
    s.npairs(r, r) = cnt[r] * (cnt[r] - 1.0) / 2.0;
    for (int c = r + 1; c < k; ++c) s.npairs(r, c) = cnt[r] * cnt[c];
  }
  return s;
}

// m log(m/n) + (n-m) log(1 - m/n) with the 0 log 0 convention.
double bernoulli_term(double n, double m) {
  if (n <= 0.0 || m <= 0.0 || m >= n) return 0.0;
  const double theta = m / n;
  return m * std::log(theta) + (n - m) * std::log1p(-theta);
}

double sbm_ll_raw(const Eigen::MatrixXd& adjacency, const std::vector<int>& z, int k) {
  const PairStats s = block_pair_stats(adjacency, z, k);
  double ll = 0.0;
  for (int r = 0; r < k; ++r)
    for (int c = r; c < k; ++c) ll += bernoulli_term(s.npairs(r, c), s.stat(r, c));
  return ll;
}

void check_fit_args(int n, int K, int restarts, int max_sweeps) {
  if (n < 1) throw std::invalid_argument("graph is empty");
  if (K < 1 || K > n) throw std::invalid_argument("K must lie in [1, n]");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
}

}  // namespace

std::string to_record(const std::string& dataset, const std::string& method,
                      const FitResult& fit, std::optional<double> threshold) {
  char buf[64];
  std::string rec = dataset + "," + method + "," + std::to_string(fit.partition.k) + ",";
  if (threshold) {
    std::snprintf(buf, sizeof(buf), "%g", *threshold);
    rec += buf;
  }
  std::snprintf(buf, sizeof(buf), ",%.6f,", fit.log_likelihood);
  rec += buf;
  rec += std::to_string(fit.seed);
  return rec;
}

double sbm_log_likelihood(const BinaryGraph& g, const Partition& p) {
  p.validate(g.n());
  return sbm_ll_raw(g.adjacency, p.z, p.k);
}

SbmParams sbm_mle(const BinaryGraph& g, const Partition& p) {
  p.validate(g.n());
  const PairStats s = block_pair_stats(g.adjacency, p.z, p.k);
  SbmParams params;
  params.theta = Eigen::MatrixXd::Zero(p.k, p.k);
  for (int r = 0; r < p.k; ++r)
    for (int c = r; c < p.k; ++c) {
      const double theta = s.npairs(r, c) > 0.0 ? s.stat(r, c) / s.npairs(r, c) : 0.0;
      params.theta(r, c) = theta;
      params.theta(c, r) = theta;
    }
  return params;
}

FitResult sbm_fit(const BinaryGraph& g, int K, int restarts, int max_sweeps,
                  std::uint64_t seed) {
  check_fit_args(g.n(), K, restarts, max_sweeps);
  // restarts run concurrently; the reduction below is identical to the
  // sequential best-of (ties keep the lower restart index)
  std::vector<std::vector<int>> assignments(static_cast<std::size_t>(restarts));
  std::vector<double> lls(static_cast<std::size_t>(restarts));
  detail::parallel_for(restarts, [&](int r) {
    Rng rng(detail::mix_seed(seed, static_cast<std::uint64_t>(r)));
    auto outcome = detail::greedy_bernoulli(g.adjacency, K, max_sweeps, rng);
    lls[static_cast<std::size_t>(r)] = sbm_ll_raw(g.adjacency, outcome.z, K);
    assignments[static_cast<std::size_t>(r)] = std::move(outcome.z);
  });
  FitResult best;
  best.log_likelihood = -std::numeric_limits<double>::infinity();
  int pick = 0;
  for (int r = 0; r < restarts; ++r)
    if (lls[static_cast<std::size_t>(r)] > best.log_likelihood) {
      best.log_likelihood = lls[static_cast<std::size_t>(r)];
      pick = r;
    }
  best.partition = Partition{assignments[static_cast<std::size_t>(pick)], K}.canonical();
  best.params = sbm_mle(g, best.partition);
  best.restarts_used = restarts;
  best.seed = seed;
  return best;
}

FitResult brute_force_sbm(const BinaryGraph& g, int K) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("graph is empty");
  if (K < 1 || K > n) throw std::invalid_argument("K must lie in [1, n]");
  if (detail::count_partitions(n, K) > kMaxBruteForcePartitions)
    throw std::invalid_argument("instance too large for exhaustive search");
  FitResult best;
  best.log_likelihood = -std::numeric_limits<double>::infinity();
  // ties within float noise keep the first (canonical) enumeration order
  detail::for_each_partition(n, K, [&](const std::vector<int>& z, int used) {
    const double ll = sbm_ll_raw(g.adjacency, z, used);
    if (ll > best.log_likelihood + detail::kMinGain) {
      best.log_likelihood = ll;
      best.partition = Partition{z, used};
    }
  });
  best.params = sbm_mle(g, best.partition);
  best.restarts_used = 0;
  best.seed = 0;
  return best;
}

}  // namespace blockcluster
