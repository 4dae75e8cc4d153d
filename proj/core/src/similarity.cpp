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

#include "blockcluster/similarity.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace blockcluster {

Metric metric_from_string(const std::string& s) {
  if (s == "chebyshev") return Metric::chebyshev;
  if (s == "manhattan") return Metric::manhattan;
  if (s == "euclidean") return Metric::euclidean;
  throw std::invalid_argument("unknown metric: " + s);
}

const char* to_string(Metric m) {
  switch (m) {
    case Metric::chebyshev: return "chebyshev";
    case Metric::manhattan: return "manhattan";
    case Metric::euclidean: return "euclidean";
  }
  return "?";
}

double pair_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y, Metric metric) {
  if (x.size() != y.size() || x.size() == 0)
    throw std::invalid_argument("vectors must have equal, nonzero length");
  if (!x.allFinite() || !y.allFinite())
    throw std::invalid_argument("vectors must be finite");
  switch (metric) {
    case Metric::chebyshev: return (x - y).cwiseAbs().maxCoeff();
    case Metric::manhattan: return (x - y).cwiseAbs().sum();
    case Metric::euclidean: return (x - y).norm();
  }
  return 0.0;
}

double similarity(const Eigen::VectorXd& x, const Eigen::VectorXd& y, Metric metric) {
  const double s = std::exp(-pair_distance(x, y, metric));
  // exp underflows to 0 for extreme distances; keep weights strictly positive
  return s > 0.0 ? s : std::numeric_limits<double>::min();
}

void SimilarityGraph::validate() const {
  const int nn = n();
  if (weights.cols() != nn) throw std::invalid_argument("weights must be square");
  for (int i = 0; i < nn; ++i) {
    if (weights(i, i) != 0.0) throw std::invalid_argument("diagonal must be 0");
    for (int j = i + 1; j < nn; ++j) {
      const double w = weights(i, j);
      if (w != weights(j, i)) throw std::invalid_argument("weights must be symmetric");
      if (!(w > 0.0) || w > 1.0)
        throw std::invalid_argument("off-diagonal weights must lie in (0, 1]");
    }
  }
}

long BinaryGraph::edge_count() const {
  return static_cast<long>(adjacency.sum() / 2.0);
}

SimilarityGraph induce_graph(const Dataset& ds, Metric metric) {
  ds.validate();
  const int n = ds.n();
  SimilarityGraph g;
  g.metric = metric;
  g.weights = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd xi = ds.features.row(i);
    for (int j = i + 1; j < n; ++j) {
      const double w = similarity(xi, ds.features.row(j), metric);
      g.weights(i, j) = w;
      g.weights(j, i) = w;
    }
  }
  return g;
}

BinaryGraph apply_threshold(const SimilarityGraph& g, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("threshold must lie in (0, 1)");
  BinaryGraph bg;
  bg.threshold = t;
  bg.adjacency = (g.weights.array() >= t).cast<double>();
  bg.adjacency.diagonal().setZero();
  return bg;
}

std::vector<double> threshold_grid(double lo, double hi, double step) {
  if (!(lo > 0.0 && lo <= hi && hi < 1.0 && step > 0.0))
    throw std::invalid_argument("threshold grid requires 0 < lo <= hi < 1 and step > 0");
  // tolerant count so that e.g. (0.1, 0.3, 0.1) yields all three points
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) grid[static_cast<std::size_t>(k)] = lo + k * step;
  return grid;
}

void write_edge_list(const SimilarityGraph& g, std::ostream& out) {
  char buf[64];
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      std::snprintf(buf, sizeof(buf), "%d,%d,%.17g\n", i, j, g.weights(i, j));
      out << buf;
    }
}

}  // namespace blockcluster
