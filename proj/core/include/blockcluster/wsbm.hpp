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

#include "blockcluster/partition.hpp"
#include "blockcluster/sbm.hpp"
#include "blockcluster/similarity.hpp"

namespace blockcluster {

/// Profile log-likelihood of the weighted block model with exponentially
/// distributed edge weights:
///
///   (1 - alpha) * sum_{i<j} [log rate(zi,zj) - rate(zi,zj) * w_ij]
///     + alpha * (Bernoulli edge-existence term)
///
/// where each block-pair rate is at its MLE (pair count / weight sum). On a
/// complete graph every pair is present, so the existence term is identically
/// zero and alpha only rescales the weight term. Throws DegenerateBlockError
/// when a non-empty block pair has zero total weight.
double wsbm_log_likelihood(const SimilarityGraph& g, const Partition& p, double alpha);

/// Rate MLEs lambda_rs = n_rs / W_rs; empty pairs get rate 0.
WsbmParams wsbm_mle(const SimilarityGraph& g, const Partition& p, double alpha);

/// Greedy maximum-likelihood fit over the weighted likelihood; same search as
/// sbm_fit. Candidate moves that would leave a non-empty block pair with total
/// weight below 1e-12 are rejected outright (degenerate rate guard).
FitResult wsbm_fit(const SimilarityGraph& g, int K, double alpha, int restarts,
                   int max_sweeps, std::uint64_t seed);

/// Exhaustive optimum over partitions into at most K blocks; same enumeration
/// and size bound as brute_force_sbm.
FitResult brute_force_wsbm(const SimilarityGraph& g, int K, double alpha);

}  // namespace blockcluster
