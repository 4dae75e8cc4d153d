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

#include "blockcluster/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "blockcluster/detail/kmeans_impl.hpp"
#include "blockcluster/random.hpp"

namespace blockcluster {

namespace detail {

namespace {

double sq_dist(const Eigen::MatrixXd& x, int i, const Eigen::RowVectorXd& c) {
  return (x.row(i) - c).squaredNorm();
}

// k-means++: first centroid uniform, then D^2 sampling against the closest
// chosen centroid.
Eigen::MatrixXd seed_centroids(const Eigen::MatrixXd& x, int K, Rng& rng) {
  const int n = static_cast<int>(x.rows());
  Eigen::MatrixXd centroids(K, x.cols());
  centroids.row(0) = x.row(static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n))));
  Eigen::VectorXd d2(n);
  for (int i = 0; i < n; ++i) d2[i] = sq_dist(x, i, centroids.row(0));
  for (int k = 1; k < K; ++k) {
    const double total = d2.sum();
    int pick;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      pick = n - 1;
      for (int i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc >= target) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n)));
    }
    centroids.row(k) = x.row(pick);
    for (int i = 0; i < n; ++i)
      d2[i] = std::min(d2[i], sq_dist(x, i, centroids.row(k)));
  }
  return centroids;
}

}  // namespace

KmeansRun kmeans_single_run(const Eigen::MatrixXd& points, int K, int max_iters,
                            double tol, Rng& rng) {
  const int n = static_cast<int>(points.rows());
  Eigen::MatrixXd centroids = seed_centroids(points, K, rng);
  KmeansRun run;
  run.assign.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> counts(static_cast<std::size_t>(K), 0);

  auto assign_all = [&]() {
    std::fill(counts.begin(), counts.end(), 0);
    double sse = 0.0;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = sq_dist(points, i, centroids.row(0));
      for (int k = 1; k < K; ++k) {
        const double d = sq_dist(points, i, centroids.row(k));
        if (d < best_d) {
          best_d = d;
          best = k;
        }
      }
      run.assign[static_cast<std::size_t>(i)] = best;
      ++counts[static_cast<std::size_t>(best)];
      sse += best_d;
    }
    return sse;
  };

  // reseed empty clusters to the point farthest from its current centroid
  auto fix_empty = [&]() {
    bool changed = false;
    for (int k = 0; k < K; ++k) {
      if (counts[static_cast<std::size_t>(k)] > 0) continue;
      int far = -1;
      double far_d = -1.0;
      for (int i = 0; i < n; ++i) {
        const int c = run.assign[static_cast<std::size_t>(i)];
        if (counts[static_cast<std::size_t>(c)] <= 1) continue;
        const double d = sq_dist(points, i, centroids.row(c));
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      if (far < 0) break;  // all clusters are singletons; nothing to steal
      --counts[static_cast<std::size_t>(run.assign[static_cast<std::size_t>(far)])];
      run.assign[static_cast<std::size_t>(far)] = k;
      ++counts[static_cast<std::size_t>(k)];
      centroids.row(k) = points.row(far);
      changed = true;
    }
    return changed;
  };
  auto assign_and_fix = [&]() {
    double sse = assign_all();
    for (int round = 0; round < K && fix_empty(); ++round) sse = assign_all();
    return sse;
  };

  for (int iter = 0; iter < max_iters; ++iter) {
    const double sse = assign_and_fix();
    run.sse_history.push_back(sse);
    run.iterations = iter + 1;

    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(K, points.cols());
    for (int i = 0; i < n; ++i) next.row(run.assign[static_cast<std::size_t>(i)]) += points.row(i);
    double shift = 0.0;
    for (int k = 0; k < K; ++k) {
      if (counts[static_cast<std::size_t>(k)] > 0)
        next.row(k) /= counts[static_cast<std::size_t>(k)];
      else
        next.row(k) = centroids.row(k);
      shift = std::max(shift, (next.row(k) - centroids.row(k)).norm());
    }
    centroids = next;
    if (shift < tol) break;
  }
  run.sse = assign_and_fix();
  run.sse_history.push_back(run.sse);
  return run;
}

}  // namespace detail

Partition kmeans_fit(const Dataset& ds, int K, int restarts, int max_iters, double tol,
                     std::uint64_t seed) {
  ds.validate();
  if (K < 2 || K > ds.n()) throw std::invalid_argument("kmeans needs 2 <= K <= n");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  detail::KmeansRun best;
  best.sse = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Rng rng(detail::mix_seed(seed, static_cast<std::uint64_t>(r)));
    detail::KmeansRun run = detail::kmeans_single_run(ds.features, K, max_iters, tol, rng);
    if (run.sse < best.sse) best = std::move(run);
  }
  return Partition{best.assign, K}.canonical();
}

namespace {

// Pair key for deterministic Ward ties: the smaller (i, j) wins.
struct MergeCandidate {
  double d = std::numeric_limits<double>::infinity();
  int i = -1;
  int j = -1;

  bool better_than(const MergeCandidate& o) const {
    if (d != o.d) return d < o.d;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

Partition ward_fit(const Dataset& ds, int K) {
  ds.validate();
  const int n = ds.n();
  if (K < 1 || K > n) throw std::invalid_argument("ward needs 1 <= K <= n");

  // squared Euclidean distances via the Gram matrix
  const Eigen::MatrixXd& x = ds.features;
  Eigen::VectorXd sq = x.rowwise().squaredNorm();
  Eigen::MatrixXd d = (-2.0 * x * x.transpose());
  d.colwise() += sq;
  d.rowwise() += sq.transpose();
  d = d.cwiseMax(0.0);
  d.diagonal().setZero();

  std::vector<bool> active(static_cast<std::size_t>(n), true);
  std::vector<double> size(static_cast<std::size_t>(n), 1.0);
  std::vector<int> member(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) member[static_cast<std::size_t>(i)] = i;

  auto pair_of = [&](int a, int b) {
    MergeCandidate c;
    c.d = d(a, b);
    c.i = std::min(a, b);
    c.j = std::max(a, b);
    return c;
  };

  // nearest active neighbour of each active cluster (Ward is reducible, so
  // these stay valid across merges except for the two merged ids)
  std::vector<int> nn(static_cast<std::size_t>(n), -1);
  auto rescan = [&](int a) {
    MergeCandidate best;
    for (int b = 0; b < n; ++b) {
      if (b == a || !active[static_cast<std::size_t>(b)]) continue;
      const MergeCandidate c = pair_of(a, b);
      if (c.better_than(best)) {
        best = c;
        nn[static_cast<std::size_t>(a)] = b;
      }
    }
  };
  for (int i = 0; i < n; ++i) rescan(i);

  for (int merges = 0; merges < n - K; ++merges) {
    MergeCandidate best;
    for (int a = 0; a < n; ++a) {
      if (!active[static_cast<std::size_t>(a)] || nn[static_cast<std::size_t>(a)] < 0) continue;
      const MergeCandidate c = pair_of(a, nn[static_cast<std::size_t>(a)]);
      if (c.better_than(best)) best = c;
    }
    const int i = best.i;
    const int j = best.j;
    const double dij = d(i, j);

    // Lance-Williams update for Ward on squared distances
    for (int k2 = 0; k2 < n; ++k2) {
      if (!active[static_cast<std::size_t>(k2)] || k2 == i || k2 == j) continue;
      const double ni = size[static_cast<std::size_t>(i)];
      const double nj = size[static_cast<std::size_t>(j)];
      const double nk = size[static_cast<std::size_t>(k2)];
      const double merged = ((ni + nk) * d(i, k2) + (nj + nk) * d(j, k2) - nk * dij) /
                            (ni + nj + nk);
      d(i, k2) = merged;
      d(k2, i) = merged;
    }
    active[static_cast<std::size_t>(j)] = false;
    size[static_cast<std::size_t>(i)] += size[static_cast<std::size_t>(j)];
    for (int p = 0; p < n; ++p)
      if (member[static_cast<std::size_t>(p)] == j) member[static_cast<std::size_t>(p)] = i;

    // repair nearest neighbours
    rescan(i);
    for (int a = 0; a < n; ++a) {
      if (!active[static_cast<std::size_t>(a)] || a == i) continue;
      const int cur = nn[static_cast<std::size_t>(a)];
      if (cur == i || cur == j) {
        rescan(a);
      } else {
        const MergeCandidate vs_i = pair_of(a, i);
        if (vs_i.better_than(pair_of(a, cur))) nn[static_cast<std::size_t>(a)] = i;
      }
    }
  }

  return Partition{member, n}.canonical();
}

}  // namespace blockcluster
