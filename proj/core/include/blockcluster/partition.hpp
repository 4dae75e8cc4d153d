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

#include <vector>

namespace blockcluster {

/// Block assignment of n nodes into blocks 0..k-1. Blocks may be empty.
struct Partition {
  std::vector<int> z;
  int k = 1;

  /// Wraps a label vector; k is max(label)+1. Entries must be non-negative.
  static Partition from_labels(std::vector<int> labels);

  int n() const { return static_cast<int>(z.size()); }

  /// Relabels blocks by first occurrence and drops empty ones, so k equals
  /// the number of non-empty blocks. Two partitions of the same grouping
  /// canonicalize to identical vectors.
  Partition canonical() const;

  int non_empty_blocks() const;

  std::vector<long> block_sizes() const;

  /// Throws std::invalid_argument when entries fall outside [0, k) or, if
  /// expected_n >= 0, when the length differs from expected_n.
  void validate(int expected_n = -1) const;
};

}  // namespace blockcluster
