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
#include <string>
#include <vector>

#include "blockcluster/dataset.hpp"
#include "blockcluster/similarity.hpp"

namespace blockcluster {

enum class Method { kmeans, ward, sbm, wsbm };

Method method_from_string(const std::string& s);
const char* to_string(Method m);

/// One benchmark cell: dataset, clustering method and all sweep parameters.
/// `dataset` is either a synthetic name (two_moons, circles, ina) or a CSV
/// path. k_max is clipped to n-1 when the data is smaller than the range.
struct ExperimentConfig {
  std::string dataset;
  std::string label_column = "class";  // applies to CSV paths only
  Method method = Method::wsbm;
  Metric metric = Metric::manhattan;
  Metric silhouette_metric = Metric::euclidean;
  Scaling scaling = Scaling::none;

  int k_min = 2;
  int k_max = 40;
  double t_min = 0.05;  // threshold grid, sbm only
  double t_max = 0.95;
  double t_step = 0.05;
  double alpha = 0.0;  // wsbm only

  int restarts = 10;
  int max_sweeps = 0;  // 0 = automatic (4n passes)
  std::uint64_t seed = 1;

  // synthetic generator knobs; defaults follow the shipped dataset sizes
  int gen_n = 0;          // 0 = dataset-specific default
  double gen_noise = 0.05;
  std::uint64_t gen_seed = 0;  // 0 = same as seed
};

struct ExperimentResult {
  ExperimentConfig config;
  int clusters = 0;                  // non-empty blocks of the chosen labeling
  double threshold = -1.0;           // chosen cutoff, sbm only (-1 = n/a)
  double silhouette = -1.0;
  double nmi = -1.0;                 // NaN when ground truth is absent
  double ari = -1.0;
  double log_likelihood = 0.0;       // block models only
  double wall_seconds = 0.0;         // informational; never serialized
  std::vector<int> labels;
  bool failed = false;
  std::string error;
};

struct SweepRow {
  double t = 0.0;
  int k = 0;
  double silhouette = -1.0;
  double nmi = -1.0;  // NaN when ground truth is absent
};

/// Materializes the configured dataset: generates a synthetic one or loads a
/// CSV (with the configured label column if present in the file), then applies
/// the configured scaling.
Dataset load_dataset(const ExperimentConfig& cfg);

/// Fits the method at every K in [k_min, k_max], scores each labeling with the
/// silhouette and returns the maximizer; ties prefer the smaller K. Labelings
/// with fewer than two non-empty clusters score the sentinel -1 and never win;
/// if every K is degenerate a NoValidClusteringError is thrown. Valid for
/// kmeans, ward and wsbm (sbm needs a threshold: use select_threshold_and_k).
ExperimentResult select_k(const Dataset& ds, const ExperimentConfig& cfg);

/// Silhouette-driven selection over the (threshold, K) product grid for the
/// thresholded Bernoulli model. Ties prefer smaller K, then smaller t.
ExperimentResult select_threshold_and_k(const Dataset& ds, const ExperimentConfig& cfg);

/// Full (t, K) score table for plotting or CSV export; row order is t-major.
/// Identical cell seeds to select_threshold_and_k, so its maximum silhouette
/// matches the selected result for the same config.
std::vector<SweepRow> sweep_report(const Dataset& ds, const ExperimentConfig& cfg);

/// Runs every config, collecting per-config failures instead of aborting;
/// output order matches input order.
std::vector<ExperimentResult> run_benchmark(const std::vector<ExperimentConfig>& configs);

enum class TableFormat { csv, markdown };

/// Renders results as `dataset,method,metric,silhouette,nmi,ari,clusters,
/// threshold,seed` CSV or as a markdown table in the column order
/// dataset | method | silhouette | nmi | ari | clusters.
std::string emit_table(const std::vector<ExperimentResult>& results, TableFormat format);

/// Sweep table as `t,k,silhouette,nmi` CSV.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Labels export as `index,label` CSV.
std::string labels_csv(const std::vector<int>& labels);

}  // namespace blockcluster
