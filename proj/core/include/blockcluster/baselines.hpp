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

#include <cstdint>

#include "blockcluster/dataset.hpp"
#include "blockcluster/partition.hpp"

namespace blockcluster {

/// Lloyd's algorithm with k-means++ seeding and Euclidean geometry. Empty
/// clusters are reseeded to the point farthest from its centroid. Returns the
/// best of `restarts` runs by within-cluster sum of squares, deterministic in
/// `seed`. Requires 2 <= K <= n.
Partition kmeans_fit(const Dataset& ds, int K, int restarts = 10, int max_iters = 300,
                     double tol = 1e-4, std::uint64_t seed = 0);

/// Agglomerative clustering with Ward linkage via the Lance-Williams update on
/// squared Euclidean distances, cut at K clusters. Merge ties are broken by
/// the smallest pair of cluster indices, so the result is fully deterministic.
/// Requires 1 <= K <= n.
Partition ward_fit(const Dataset& ds, int K);

}  // namespace blockcluster
