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

// A move is accepted only when its likelihood gain exceeds this; it screens
// out float noise so every accepted move is a true strict improvement.
inline constexpr double kMinGain = 1e-9;

// Candidate moves creating a non-empty block pair with total weight below
// this are rejected (exponential model only; the rate MLE would blow up).
inline constexpr double kMinPairWeight = 1e-12;

struct Move {
  int node;
  int from;
  int to;
};

/// Optional record of one greedy run, enough to replay the ascent.
struct GreedyTrace {
  std::vector<int> initial;
  std::vector<Move> moves;
};

struct GreedyOutcome {
  std::vector<int> z;
  int passes = 0;  // scan passes performed, including the final non-improving one
};

/// Steepest-ascent single-node relabeling over the profile Bernoulli
/// likelihood of a 0/1 adjacency matrix. One pass scans all n*(K-1) candidate
/// moves and applies the best strictly improving one; stops when none improves
/// or after max_sweeps passes. Starts from a uniform-random assignment drawn
/// from rng.
GreedyOutcome greedy_bernoulli(const Eigen::MatrixXd& adjacency, int K, int max_sweeps,
                               Rng& rng, GreedyTrace* trace = nullptr);

/// Same search over the profile exponential-weight likelihood of a positive
/// weight matrix. `scale` multiplies every likelihood term (used for the
/// (1 - alpha) mixing weight); it must be positive.
GreedyOutcome greedy_exponential(const Eigen::MatrixXd& weights, int K, int max_sweeps,
                                 Rng& rng, double scale = 1.0, GreedyTrace* trace = nullptr);

}  // namespace blockcluster::detail
