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

#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "blockcluster/dataset.hpp"

namespace blockcluster {

enum class Metric { chebyshev, manhattan, euclidean };

Metric metric_from_string(const std::string& s);
const char* to_string(Metric m);

/// Distance between two feature vectors under the chosen metric.
double pair_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y, Metric metric);

/// exp(-distance): symmetric, in (0, 1], equal to 1 iff x == y. Underflow is
/// clamped to the smallest positive double so weights stay strictly positive.
double similarity(const Eigen::VectorXd& x, const Eigen::VectorXd& y, Metric metric);

/// Complete weighted graph over the rows of a dataset. Off-diagonal weights
/// lie in (0, 1]; the diagonal is fixed to 0 (simple graph, no self loops).
struct SimilarityGraph {
  Eigen::MatrixXd weights;  // n x n symmetric, zero diagonal
  Metric metric = Metric::manhattan;

  int n() const { return static_cast<int>(weights.rows()); }
  void validate() const;
};

/// Unweighted graph obtained by keeping edges with weight >= threshold.
/// Adjacency entries are 0.0/1.0 so block statistics can reuse dense kernels.
struct BinaryGraph {
  Eigen::MatrixXd adjacency;  // n x n symmetric 0/1, zero diagonal
  double threshold = 0.0;

  int n() const { return static_cast<int>(adjacency.rows()); }
  bool edge(int i, int j) const { return adjacency(i, j) != 0.0; }
  long edge_count() const;
};

/// Pairwise similarity over all rows; requires ds.n() >= 2.
SimilarityGraph induce_graph(const Dataset& ds, Metric metric);

/// Keeps edges with weight >= t; vertices are retained even when isolated.
/// Requires 0 < t < 1.
BinaryGraph apply_threshold(const SimilarityGraph& g, double t);

/// Arithmetic grid lo, lo+step, ... <= hi. Requires 0 < lo <= hi < 1, step > 0.
std::vector<double> threshold_grid(double lo, double hi, double step);

/// Edge list dump `i,j,weight` with 0-based vertex ids, upper triangle only.
void write_edge_list(const SimilarityGraph& g, std::ostream& out);

}  // namespace blockcluster
