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

#include "blockcluster/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockcluster {

Partition Partition::from_labels(std::vector<int> labels) {
  Partition p;
  int maxv = 0;
  for (int v : labels) {
    if (v < 0) throw std::invalid_argument("labels must be non-negative");
    maxv = std::max(maxv, v);
  }
  p.k = labels.empty() ? 1 : maxv + 1;
  p.z = std::move(labels);
  return p;
}

Partition Partition::canonical() const {
  Partition out;
  out.z.resize(z.size());
  std::vector<int> remap(static_cast<std::size_t>(k), -1);
  int next = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    int& target = remap[static_cast<std::size_t>(z[i])];
    if (target < 0) target = next++;
    out.z[i] = target;
  }
  out.k = std::max(next, 1);
  return out;
}

int Partition::non_empty_blocks() const {
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  int count = 0;
  for (int v : z)
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      ++count;
    }
  return count;
}

std::vector<long> Partition::block_sizes() const {
  std::vector<long> sizes(static_cast<std::size_t>(k), 0);
  for (int v : z) ++sizes[static_cast<std::size_t>(v)];
  return sizes;
}

void Partition::validate(int expected_n) const {
  if (k < 1) throw std::invalid_argument("partition needs k >= 1");
  if (expected_n >= 0 && static_cast<int>(z.size()) != expected_n)
    throw std::invalid_argument("partition length does not match graph size");
  for (int v : z)
    if (v < 0 || v >= k) throw std::invalid_argument("block id out of range");
}

}  // namespace blockcluster
