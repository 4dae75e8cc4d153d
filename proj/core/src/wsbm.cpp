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

#include "blockcluster/wsbm.hpp"

#include <cmath>
#include <vector>
#include <limits>
#include <stdexcept>

#include "blockcluster/detail/greedy.hpp"
#include "blockcluster/detail/parallel.hpp"
#include "blockcluster/detail/partitions.hpp"
#include "blockcluster/errors.hpp"
#include "blockcluster/random.hpp"

namespace blockcluster {

namespace {

constexpr double kMaxBruteForcePartitions = 1e6;

struct WeightStats {
  Eigen::MatrixXd npairs;
  Eigen::MatrixXd wsum;     // total edge weight per block pair
  Eigen::MatrixXd present;  // pairs with positive weight (edge-existence term)
};

WeightStats weight_stats(const Eigen::MatrixXd& w, const std::vector<int>& z, int k) {
  WeightStats s;
  s.npairs = Eigen::MatrixXd::Zero(k, k);
  s.wsum = Eigen::MatrixXd::Zero(k, k);
  s.present = Eigen::MatrixXd::Zero(k, k);
  const int n = static_cast<int>(w.rows());
  Eigen::VectorXd cnt = Eigen::VectorXd::Zero(k);
  for (int i = 0; i < n; ++i) cnt[z[static_cast<std::size_t>(i)]] += 1.0;
  for (int i = 0; i < n; ++i) {
    const int zi = z[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      const int zj = z[static_cast<std::size_t>(j)];
      const int r = zi <= zj ? zi : zj;
      const int c = zi <= zj ? zj : zi;
      s.wsum(r, c) += w(i, j);
      if (w(i, j) > 0.0) s.present(r, c) += 1.0;
    }
  }
  for (int r = 0; r < k; ++r) {
    s.npairs(r, r) = cnt[r] * (cnt[r] - 1.0) / 2.0;
    for (int c = r + 1; c < k; ++c) s.npairs(r, c) = cnt[r] * cnt[c];
  }
  return s;
}

double bernoulli_term(double n, double m) {
  if (n <= 0.0 || m <= 0.0 || m >= n) return 0.0;
  const double theta = m / n;
  return m * std::log(theta) + (n - m) * std::log1p(-theta);
}

// sum over block pairs of N log(N/W) - N, the exponential weight
// log-likelihood at the per-pair rate MLE, plus the alpha-weighted
// edge-existence term over the positive-weight adjacency.
double wsbm_ll_raw(const Eigen::MatrixXd& w, const std::vector<int>& z, int k, double alpha) {
  const WeightStats s = weight_stats(w, z, k);
  double weight_part = 0.0;
  double existence_part = 0.0;
  for (int r = 0; r < k; ++r)
    for (int c = r; c < k; ++c) {
      const double np = s.npairs(r, c);
      if (np <= 0.0) continue;
      if (!(s.wsum(r, c) > 0.0))
        throw DegenerateBlockError("block pair with zero total weight: rate MLE undefined");
      weight_part += np * (std::log(np / s.wsum(r, c)) - 1.0);
      existence_part += bernoulli_term(np, s.present(r, c));
    }
  return (1.0 - alpha) * weight_part + alpha * existence_part;
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1]");
}

}  // namespace

double wsbm_log_likelihood(const SimilarityGraph& g, const Partition& p, double alpha) {
  check_alpha(alpha);
  p.validate(g.n());
  return wsbm_ll_raw(g.weights, p.z, p.k, alpha);
}

WsbmParams wsbm_mle(const SimilarityGraph& g, const Partition& p, double alpha) {
  check_alpha(alpha);
  p.validate(g.n());
  const WeightStats s = weight_stats(g.weights, p.z, p.k);
  WsbmParams params;
  params.alpha = alpha;
  params.rates = Eigen::MatrixXd::Zero(p.k, p.k);
  for (int r = 0; r < p.k; ++r)
    for (int c = r; c < p.k; ++c) {
      const double rate =
          s.npairs(r, c) > 0.0 && s.wsum(r, c) > 0.0 ? s.npairs(r, c) / s.wsum(r, c) : 0.0;
      params.rates(r, c) = rate;
      params.rates(c, r) = rate;
    }
  return params;
}

FitResult wsbm_fit(const SimilarityGraph& g, int K, double alpha, int restarts,
                   int max_sweeps, std::uint64_t seed) {
  check_alpha(alpha);
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("graph is empty");
  if (K < 1 || K > n) throw std::invalid_argument("K must lie in [1, n]");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
  // restarts run concurrently; the reduction below is identical to the
  // sequential best-of (ties keep the lower restart index)
  std::vector<std::vector<int>> assignments(static_cast<std::size_t>(restarts));
  std::vector<double> lls(static_cast<std::size_t>(restarts));
  detail::parallel_for(restarts, [&](int r) {
    Rng rng(detail::mix_seed(seed, static_cast<std::uint64_t>(r)));
    auto outcome = detail::greedy_exponential(g.weights, K, max_sweeps, rng, 1.0 - alpha);
    lls[static_cast<std::size_t>(r)] = wsbm_ll_raw(g.weights, outcome.z, K, alpha);
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
  best.params = wsbm_mle(g, best.partition, alpha);
  best.restarts_used = restarts;
  best.seed = seed;
  return best;
}

FitResult brute_force_wsbm(const SimilarityGraph& g, int K, double alpha) {
  check_alpha(alpha);
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("graph is empty");
  if (K < 1 || K > n) throw std::invalid_argument("K must lie in [1, n]");
  if (detail::count_partitions(n, K) > kMaxBruteForcePartitions)
    throw std::invalid_argument("instance too large for exhaustive search");
  FitResult best;
  best.log_likelihood = -std::numeric_limits<double>::infinity();
  // ties within float noise keep the first (canonical) enumeration order
  detail::for_each_partition(n, K, [&](const std::vector<int>& z, int used) {
    const double ll = wsbm_ll_raw(g.weights, z, used, alpha);
    if (ll > best.log_likelihood + detail::kMinGain) {
      best.log_likelihood = ll;
      best.partition = Partition{z, used};
    }
  });
  best.params = wsbm_mle(g, best.partition, alpha);
  best.restarts_used = 0;
  best.seed = 0;
  return best;
}

}  // namespace blockcluster
