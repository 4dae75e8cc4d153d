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

#include <stdexcept>
#include <string>

namespace blockcluster {

/// Malformed or unreadable input data (CSV parse failures, missing files).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A model-selection sweep where every cell produced fewer than two clusters.
class NoValidClusteringError : public std::runtime_error {
public:
  explicit NoValidClusteringError(const std::string& what) : std::runtime_error(what) {}
};

/// A block pair whose rate MLE is undefined (zero total weight on present pairs).
class DegenerateBlockError : public std::runtime_error {
public:
  explicit DegenerateBlockError(const std::string& what) : std::runtime_error(what) {}
};

/// Score that is undefined for the given partition (e.g. silhouette with one cluster).
class UndefinedScoreError : public std::runtime_error {
public:
  explicit UndefinedScoreError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace blockcluster
