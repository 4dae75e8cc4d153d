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
#include <vector>

namespace blockcluster {

/// Tabular data: an n x d feature matrix plus optional ground-truth class ids.
struct Dataset {
  std::string name;
  Eigen::MatrixXd features;               // n x d, finite entries
  std::vector<int> labels;                 // empty when no ground truth
  std::vector<std::string> label_names;    // class id -> original token

  int n() const { return static_cast<int>(features.rows()); }
  int d() const { return static_cast<int>(features.cols()); }
  bool has_labels() const { return !labels.empty(); }
  int num_classes() const;

  /// Throws std::invalid_argument on any violated invariant
  /// (n >= 2, finite entries, label vector length).
  void validate() const;
};

enum class Scaling { none, minmax, zscore };

Scaling scaling_from_string(const std::string& s);
const char* to_string(Scaling s);

/// Loads a comma-separated file with a header line. When `label_column` is
/// given it is matched against the header first; if no header matches and the
/// string parses as a non-negative integer it is taken as a 0-based column
/// index. Label tokens are mapped to dense class ids by first occurrence.
/// Throws DataError on missing files, ragged rows, non-numeric feature cells
/// and unknown label columns.
Dataset load_csv(const std::string& path,
                 const std::optional<std::string>& label_column = std::nullopt);

/// Writes the dataset back out in the load_csv schema: header f0..f{d-1}
/// plus a trailing `class` column when labels are present. Features are
/// printed with round-trip precision.
void write_csv(const Dataset& ds, const std::string& path);

/// Two interleaving half-circles with additive Gaussian noise.
/// floor(n/2) points on the upper moon, the rest on the lower; labels are
/// moon membership. Deterministic in (n, noise, seed).
Dataset gen_two_moons(int n, double noise, std::uint64_t seed);

/// Three concentric circles of radii 1, 2, 3 with additive Gaussian noise.
/// n is split evenly with any remainder going to the outer rings; labels are
/// the ring index, innermost first.
Dataset gen_circles(int n, double noise, std::uint64_t seed);

/// Three isotropic Gaussian blobs (stddev 0.6) centered on an equilateral
/// triangle of side 4, sizes as equal as possible; labels are the blob id.
Dataset gen_ina(int n, std::uint64_t seed);

/// Per-feature rescaling. minmax maps each column to [0,1], zscore to mean 0
/// and unit standard deviation; constant columns map to 0 in both modes.
/// Labels pass through untouched.
Dataset standardize(const Dataset& ds, Scaling mode);

}  // namespace blockcluster
