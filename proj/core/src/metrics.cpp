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

#include "blockcluster/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "blockcluster/errors.hpp"

namespace blockcluster {

namespace {

Eigen::MatrixXd distance_matrix(const Eigen::MatrixXd& x, Metric metric) {
  const int n = static_cast<int>(x.rows());
  Eigen::MatrixXd d(n, n);
  if (metric == Metric::euclidean) {
    const Eigen::VectorXd sq = x.rowwise().squaredNorm();
    d = -2.0 * x * x.transpose();
    d.colwise() += sq;
    d.rowwise() += sq.transpose();
    d = d.cwiseMax(0.0).cwiseSqrt();
  } else {
    for (int i = 0; i < n; ++i) {
      const auto diff = (x.rowwise() - x.row(i)).cwiseAbs();
      if (metric == Metric::manhattan)
        d.row(i) = diff.rowwise().sum();
      else
        d.row(i) = diff.rowwise().maxCoeff();
    }
  }
  d.diagonal().setZero();
  return d;
}

std::vector<int> dense_ids(const std::vector<int>& labels, int& num_classes) {
  std::unordered_map<int, int> remap;
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = remap.try_emplace(labels[i], static_cast<int>(remap.size()));
    out[i] = it->second;
  }
  num_classes = static_cast<int>(remap.size());
  return out;
}

double choose2(double v) { return v * (v - 1.0) / 2.0; }

}  // namespace

SilhouetteDetail silhouette(const Dataset& ds, const Partition& p, Metric distance) {
  p.validate(ds.n());
  const int n = ds.n();
  int k = 0;
  const std::vector<int> ids = dense_ids(p.z, k);
  if (k < 2) throw UndefinedScoreError("silhouette needs at least 2 non-empty clusters");

  std::vector<long> sizes(static_cast<std::size_t>(k), 0);
  for (int v : ids) ++sizes[static_cast<std::size_t>(v)];

  const Eigen::MatrixXd d = distance_matrix(ds.features, distance);
  SilhouetteDetail out;
  out.a.setZero(n);
  out.b.setZero(n);
  out.s.setZero(n);
  std::vector<double> cluster_sum(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) {
    std::fill(cluster_sum.begin(), cluster_sum.end(), 0.0);
    for (int j = 0; j < n; ++j) cluster_sum[static_cast<std::size_t>(ids[j])] += d(i, j);
    const int own = ids[static_cast<std::size_t>(i)];
    const long own_size = sizes[static_cast<std::size_t>(own)];
    double b = std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      if (c == own) continue;
      b = std::min(b, cluster_sum[static_cast<std::size_t>(c)] /
                          static_cast<double>(sizes[static_cast<std::size_t>(c)]));
    }
    out.b[i] = b;
    if (own_size <= 1) {
      out.a[i] = 0.0;
      out.s[i] = 0.0;  // singleton convention
      continue;
    }
    out.a[i] = cluster_sum[static_cast<std::size_t>(own)] / static_cast<double>(own_size - 1);
    const double denom = std::max(out.a[i], out.b[i]);
    out.s[i] = denom > 0.0 ? (out.b[i] - out.a[i]) / denom : 0.0;
  }
  out.mean_s = out.s.mean();
  return out;
}

Eigen::MatrixXi contingency(const std::vector<int>& t, const std::vector<int>& c) {
  if (t.size() != c.size()) throw std::invalid_argument("label vectors differ in length");
  int rt = 0, rc = 0;
  const std::vector<int> it = dense_ids(t, rt);
  const std::vector<int> ic = dense_ids(c, rc);
  Eigen::MatrixXi table = Eigen::MatrixXi::Zero(std::max(rt, 1), std::max(rc, 1));
  for (std::size_t i = 0; i < it.size(); ++i) ++table(it[i], ic[i]);
  return table;
}

namespace {

MetricBreakdown evaluate_labels(const std::vector<int>& t, const std::vector<int>& c) {
  const Eigen::MatrixXi table = contingency(t, c);
  const double n = static_cast<double>(t.size());
  const Eigen::VectorXd rows = table.cast<double>().rowwise().sum();
  const Eigen::VectorXd cols = table.cast<double>().colwise().sum();

  MetricBreakdown out;
  for (int r = 0; r < table.rows(); ++r)
    for (int s = 0; s < table.cols(); ++s) {
      const double nij = table(r, s);
      if (nij > 0.0)
        out.mutual_information += nij / n * std::log(n * nij / (rows[r] * cols[s]));
    }
  for (int r = 0; r < table.rows(); ++r)
    if (rows[r] > 0.0) out.entropy_true -= rows[r] / n * std::log(rows[r] / n);
  for (int s = 0; s < table.cols(); ++s)
    if (cols[s] > 0.0) out.entropy_pred -= cols[s] / n * std::log(cols[s] / n);

  const double entropy_sum = out.entropy_true + out.entropy_pred;
  // both labelings constant: 0/0 convention scores 1
  out.nmi = entropy_sum > 0.0 ? 2.0 * out.mutual_information / entropy_sum : 1.0;

  if (t.size() >= 2) {
    const double total_pairs = choose2(n);
    double sij = 0.0;
    for (int r = 0; r < table.rows(); ++r)
      for (int s = 0; s < table.cols(); ++s) sij += choose2(table(r, s));
    double sa = 0.0, sb = 0.0;
    for (int r = 0; r < table.rows(); ++r) sa += choose2(rows[r]);
    for (int s = 0; s < table.cols(); ++s) sb += choose2(cols[s]);
    out.ri = (total_pairs + 2.0 * sij - sa - sb) / total_pairs;
    out.expected_ri = (sa * sb + (total_pairs - sa) * (total_pairs - sb)) /
                      (total_pairs * total_pairs);
    out.max_ri = 1.0;
    const double denom = out.max_ri - out.expected_ri;
    // degenerate chance correction (both single-cluster or both all-singleton,
    // i.e. identical partitions) scores 1
    out.ari = denom > 0.0 ? (out.ri - out.expected_ri) / denom : 1.0;
  } else {
    out.ri = 1.0;
    out.expected_ri = 0.0;
    out.ari = 1.0;
  }
  return out;
}

}  // namespace

MetricBreakdown nmi(const std::vector<int>& t, const std::vector<int>& c) {
  if (t.empty()) throw std::invalid_argument("nmi needs length >= 1");
  return evaluate_labels(t, c);
}

MetricBreakdown ari(const std::vector<int>& t, const std::vector<int>& c) {
  if (t.size() < 2) throw std::invalid_argument("ari needs length >= 2");
  return evaluate_labels(t, c);
}

}  // namespace blockcluster
