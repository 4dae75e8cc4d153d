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

#include "blockcluster/detail/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockcluster::detail {

double count_partitions(int n, int max_blocks, double cap) {
  if (n < 1 || max_blocks < 1) return 0.0;
  // Stirling numbers of the second kind, S(i, j) = j S(i-1, j) + S(i-1, j-1)
  const int kmax = std::min(n, max_blocks);
  std::vector<double> row(static_cast<std::size_t>(kmax) + 1, 0.0);
  row[1] = 1.0;  // S(1, 1)
  for (int i = 2; i <= n; ++i) {
    for (int j = std::min(i, kmax); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
      row[static_cast<std::size_t>(j)] = std::min(row[static_cast<std::size_t>(j)], cap);
    }
  }
  double total = 0.0;
  for (int j = 1; j <= kmax; ++j) total = std::min(total + row[static_cast<std::size_t>(j)], cap);
  return total;
}

void for_each_partition(int n, int max_blocks,
                        const std::function<void(const std::vector<int>&, int)>& fn) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (max_blocks < 1) throw std::invalid_argument("enumeration needs max_blocks >= 1");
  // Restricted growth strings: z[0] = 0 and z[i] <= max(z[0..i-1]) + 1.
  std::vector<int> z(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    int used = prefix_max[static_cast<std::size_t>(n) - 1] + 1;
    fn(z, used);
    // advance to the next string in lexicographic order
    int i = n - 1;
    for (; i > 0; --i) {
      const int limit = std::min(prefix_max[static_cast<std::size_t>(i) - 1] + 1, max_blocks - 1);
      if (z[static_cast<std::size_t>(i)] < limit) break;
    }
    if (i == 0) return;
    ++z[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i) - 1], z[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      z[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(j) - 1];
    }
  }
}

}  // namespace blockcluster::detail
