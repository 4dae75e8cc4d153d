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

#include <functional>

namespace blockcluster::detail {

/// Worker count used by parallel_for: BLOCKCLUSTER_THREADS when set, otherwise
/// the hardware concurrency.
unsigned worker_count();

/// Runs body(0..count-1) across worker threads. Indices are handed out through
/// an atomic counter; bodies must only write to per-index state so the overall
/// result is schedule independent. The first exception thrown by a body is
/// rethrown on the calling thread after all workers join.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace blockcluster::detail
