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
#include <vector>

#include "blockcluster/dataset.hpp"
#include "blockcluster/partition.hpp"
#include "blockcluster/similarity.hpp"

namespace blockcluster {

/// Per-point silhouette decomposition.
///   a(i): mean distance to the other members of i's cluster (0 for singletons)
///   b(i): smallest mean distance to any other cluster
///   s(i): (b - a) / max(a, b), with s = 0 for singletons and for a = b = 0
struct SilhouetteDetail {
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd s;
  double mean_s = 0.0;
};

/// Computes the silhouette in raw feature space under the chosen distance.
/// Throws UndefinedScoreError when the partition has fewer than two non-empty
/// clusters.
SilhouetteDetail silhouette(const Dataset& ds, const Partition& p,
                            Metric distance = Metric::euclidean);

/// Shared intermediate quantities of the label-comparison indices. All
/// entropies and mutual information use natural logarithms.
struct MetricBreakdown {
  double mutual_information = 0.0;  // I(T, C), nats
  double entropy_true = 0.0;        // H(T)
  double entropy_pred = 0.0;        // H(C)
  double nmi = 0.0;                 // 2 I / (H(T) + H(C))
  double ri = 0.0;                  // Rand index in [0, 1]
  double expected_ri = 0.0;         // chance-level Rand index
  double max_ri = 1.0;
  double ari = 0.0;                 // (ri - expected_ri) / (max_ri - expected_ri)
};

/// Contingency table between two labelings; classes are indexed by first
/// occurrence in each argument. Entry (r, s) counts items with t-class r and
/// c-class s. Throws std::invalid_argument on length mismatch.
Eigen::MatrixXi contingency(const std::vector<int>& t, const std::vector<int>& c);

/// Normalized mutual information, 2 I/(H(T)+H(C)). Two single-cluster
/// labelings score 1 (the 0/0 convention); when exactly one entropy is zero
/// the score is 0. Requires equal lengths >= 1.
MetricBreakdown nmi(const std::vector<int>& t, const std::vector<int>& c);

/// Adjusted Rand index via pair counting. When the chance-correction
/// denominator vanishes (both single-cluster or both all-singleton, i.e.
/// identical partitions) the score is 1. Requires equal lengths >= 2.
MetricBreakdown ari(const std::vector<int>& t, const std::vector<int>& c);

}  // namespace blockcluster
