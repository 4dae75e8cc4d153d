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
#include <functional>
#include <vector>

namespace blockcluster::detail {

/// Number of set partitions of n items into at most max_blocks blocks
/// (sum of Stirling numbers of the second kind). Saturates at `cap`.
double count_partitions(int n, int max_blocks, double cap = 1e18);

/// Enumerates all set partitions of n items into at most max_blocks blocks as
/// restricted growth strings, in lexicographic order starting from the
/// all-zeros assignment. The callback receives the assignment and the number
/// of blocks in use; the vector is reused between calls.
void for_each_partition(int n, int max_blocks,
                        const std::function<void(const std::vector<int>&, int)>& fn);

}  // namespace blockcluster::detail
