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

#include "blockcluster/random.hpp"

namespace blockcluster::detail {

/// One Lloyd run from a k-means++ start. sse_history holds the within-cluster
/// sum of squares after every assignment step (non-increasing by construction).
struct KmeansRun {
  std::vector<int> assign;
  double sse = 0.0;
  std::vector<double> sse_history;
  int iterations = 0;
};

KmeansRun kmeans_single_run(const Eigen::MatrixXd& points, int K, int max_iters,
                            double tol, Rng& rng);

}  // namespace blockcluster::detail
