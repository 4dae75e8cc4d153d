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
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "blockcluster/partition.hpp"
#include "blockcluster/similarity.hpp"

namespace blockcluster {

/// Between-block edge probabilities of the Bernoulli block model.
struct SbmParams {
  Eigen::MatrixXd theta;  // K x K symmetric, entries in [0, 1]
};

/// Per-block-pair exponential rates of the weighted block model, plus the
/// mixing weight between the edge-existence and edge-weight terms.
struct WsbmParams {
  Eigen::MatrixXd rates;  // K x K symmetric, entries > 0
  double alpha = 0.0;     // in [0, 1]
};

struct FitResult {
  Partition partition;  // canonical form: k == number of non-empty blocks
  std::variant<SbmParams, WsbmParams> params;
  double log_likelihood = 0.0;
  int restarts_used = 0;
  std::uint64_t seed = 0;
};

/// Text record `dataset,method,K,threshold,loglik,seed`; threshold is left
/// empty when not supplied.
std::string to_record(const std::string& dataset, const std::string& method,
                      const FitResult& fit, std::optional<double> threshold = std::nullopt);

/// Profile log-likelihood of the Bernoulli block model: every between-block
/// probability is replaced by its MLE m_rs/n_rs given the partition, and
/// saturated or empty block pairs contribute 0 (the 0*log(0) convention).
double sbm_log_likelihood(const BinaryGraph& g, const Partition& p);

/// Edge-probability MLEs theta_rs = m_rs / n_rs for the partition.
/// Pairs with no possible dyads get theta 0.
SbmParams sbm_mle(const BinaryGraph& g, const Partition& p);

/// Greedy maximum-likelihood fit. Each pass scans every (node, target block)
/// relabeling and applies the single move with the largest likelihood gain;
/// the search stops when no move improves the likelihood or after max_sweeps
/// passes. The best of `restarts` independent uniform-random starts is
/// returned (ties keep the lower restart index). Deterministic in `seed`.
FitResult sbm_fit(const BinaryGraph& g, int K, int restarts, int max_sweeps,
                  std::uint64_t seed);

/// Exhaustive search over all partitions into at most K blocks, enumerated in
/// canonical (restricted growth) form. Throws std::invalid_argument when the
/// number of partitions exceeds 10^6.
FitResult brute_force_sbm(const BinaryGraph& g, int K);

}  // namespace blockcluster
