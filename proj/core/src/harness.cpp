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

#include "blockcluster/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "blockcluster/baselines.hpp"
#include "blockcluster/detail/parallel.hpp"
#include "blockcluster/errors.hpp"
#include "blockcluster/metrics.hpp"
#include "blockcluster/random.hpp"
#include "blockcluster/sbm.hpp"
#include "blockcluster/wsbm.hpp"

namespace blockcluster {

Method method_from_string(const std::string& s) {
  if (s == "kmeans") return Method::kmeans;
  if (s == "ward") return Method::ward;
  if (s == "sbm") return Method::sbm;
  if (s == "wsbm") return Method::wsbm;
  throw std::invalid_argument("unknown method: " + s);
}

const char* to_string(Method m) {
  switch (m) {
    case Method::kmeans: return "kmeans";
    case Method::ward: return "ward";
    case Method::sbm: return "sbm";
    case Method::wsbm: return "wsbm";
  }
  return "?";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kDefaultKmeansIters = 300;
constexpr double kDefaultKmeansTol = 1e-4;

// Seed of one sweep cell. t_index is -1 for sweeps without a threshold grid,
// so select_k and select_threshold_and_k cells never collide.
std::uint64_t cell_seed(std::uint64_t seed, int t_index, int k) {
  return detail::mix_seed(detail::mix_seed(seed, static_cast<std::uint64_t>(t_index + 1)),
                          static_cast<std::uint64_t>(k));
}

int effective_max_sweeps(const ExperimentConfig& cfg, int n) {
  return cfg.max_sweeps >= 1 ? cfg.max_sweeps : 4 * n;
}

struct KRange {
  int lo;
  int hi;
  int count() const { return hi - lo + 1; }
};

KRange k_range(const ExperimentConfig& cfg, int n) {
  const int lo = cfg.k_min;
  const int hi = std::min(cfg.k_max, n - 1);
  if (lo < 2) throw std::invalid_argument("k_min must be >= 2");
  if (lo > hi) throw std::invalid_argument("empty k_range");
  return {lo, hi};
}

struct Cell {
  Partition partition;
  double silhouette = -1.0;
  double log_likelihood = kNaN;
};

double score_cell(const Dataset& ds, const Partition& p, Metric silhouette_metric) {
  if (p.non_empty_blocks() < 2) return -1.0;  // sentinel: never wins selection
  return silhouette(ds, p, silhouette_metric).mean_s;
}

void finish_result(const Dataset& ds, ExperimentResult& r, const Cell& cell) {
  r.clusters = cell.partition.k;
  r.silhouette = cell.silhouette;
  r.labels = cell.partition.z;
  r.log_likelihood = cell.log_likelihood;
  if (ds.has_labels()) {
    r.nmi = nmi(ds.labels, r.labels).nmi;
    r.ari = ari(ds.labels, r.labels).ari;
  } else {
    r.nmi = kNaN;
    r.ari = kNaN;
  }
}

}  // namespace

Dataset load_dataset(const ExperimentConfig& cfg) {
  const std::uint64_t gseed = cfg.gen_seed ? cfg.gen_seed : cfg.seed;
  Dataset ds;
  if (cfg.dataset == "two_moons") {
    ds = gen_two_moons(cfg.gen_n > 0 ? cfg.gen_n : 250, cfg.gen_noise, gseed);
  } else if (cfg.dataset == "circles") {
    ds = gen_circles(cfg.gen_n > 0 ? cfg.gen_n : 336, cfg.gen_noise, gseed);
  } else if (cfg.dataset == "ina") {
    ds = gen_ina(cfg.gen_n > 0 ? cfg.gen_n : 660, gseed);
  } else {
    ds = load_csv(cfg.dataset, cfg.label_column.empty()
                                   ? std::nullopt
                                   : std::optional<std::string>(cfg.label_column));
  }
  return standardize(ds, cfg.scaling);
}

ExperimentResult select_k(const Dataset& ds, const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ds.validate();
  if (cfg.method == Method::sbm)
    throw std::invalid_argument("sbm needs a threshold sweep; use select_threshold_and_k");
  const KRange range = k_range(cfg, ds.n());
  const int max_sweeps = effective_max_sweeps(cfg, ds.n());

  SimilarityGraph graph;
  if (cfg.method == Method::wsbm) graph = induce_graph(ds, cfg.metric);

  std::vector<Cell> cells(static_cast<std::size_t>(range.count()));
  detail::parallel_for(range.count(), [&](int ci) {
    const int K = range.lo + ci;
    Cell& cell = cells[static_cast<std::size_t>(ci)];
    const std::uint64_t cs = cell_seed(cfg.seed, -1, K);
    switch (cfg.method) {
      case Method::kmeans:
        cell.partition = kmeans_fit(ds, K, cfg.restarts, kDefaultKmeansIters,
                                    kDefaultKmeansTol, cs);
        break;
      case Method::ward:
        cell.partition = ward_fit(ds, K);
        break;
      case Method::wsbm: {
        const FitResult fit =
            wsbm_fit(graph, K, cfg.alpha, cfg.restarts, max_sweeps, cs);
        cell.partition = fit.partition;
        cell.log_likelihood = fit.log_likelihood;
        break;
      }
      default: break;
    }
    cell.silhouette = score_cell(ds, cell.partition, cfg.silhouette_metric);
  });

  int best = -1;
  for (int ci = 0; ci < range.count(); ++ci)
    if (best < 0 ||
        cells[static_cast<std::size_t>(ci)].silhouette > cells[static_cast<std::size_t>(best)].silhouette)
      best = ci;
  if (best < 0 || cells[static_cast<std::size_t>(best)].silhouette <= -1.0)
    throw NoValidClusteringError("every K produced fewer than 2 clusters");

  ExperimentResult r;
  r.config = cfg;
  r.threshold = kNaN;
  finish_result(ds, r, cells[static_cast<std::size_t>(best)]);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ExperimentResult select_threshold_and_k(const Dataset& ds, const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ds.validate();
  if (cfg.method != Method::sbm)
    throw std::invalid_argument("select_threshold_and_k applies to the sbm method");
  const KRange range = k_range(cfg, ds.n());
  const std::vector<double> grid = threshold_grid(cfg.t_min, cfg.t_max, cfg.t_step);
  const int max_sweeps = effective_max_sweeps(cfg, ds.n());
  const SimilarityGraph graph = induce_graph(ds, cfg.metric);

  const int tcount = static_cast<int>(grid.size());
  const int total = range.count() * tcount;
  std::vector<Cell> cells(static_cast<std::size_t>(total));
  // cell order: K-major, then t, matching the tie-break (smaller K, smaller t)
  detail::parallel_for(total, [&](int ci) {
    const int K = range.lo + ci / tcount;
    const int ti = ci % tcount;
    Cell& cell = cells[static_cast<std::size_t>(ci)];
    const BinaryGraph bg = apply_threshold(graph, grid[static_cast<std::size_t>(ti)]);
    const FitResult fit = sbm_fit(bg, K, cfg.restarts, max_sweeps, cell_seed(cfg.seed, ti, K));
    cell.partition = fit.partition;
    cell.log_likelihood = fit.log_likelihood;
    cell.silhouette = score_cell(ds, cell.partition, cfg.silhouette_metric);
  });

  int best = -1;
  for (int ci = 0; ci < total; ++ci)
    if (best < 0 ||
        cells[static_cast<std::size_t>(ci)].silhouette > cells[static_cast<std::size_t>(best)].silhouette)
      best = ci;
  if (best < 0 || cells[static_cast<std::size_t>(best)].silhouette <= -1.0)
    throw NoValidClusteringError("every (threshold, K) cell produced fewer than 2 clusters");

  ExperimentResult r;
  r.config = cfg;
  r.threshold = grid[static_cast<std::size_t>(best % tcount)];
  finish_result(ds, r, cells[static_cast<std::size_t>(best)]);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SweepRow> sweep_report(const Dataset& ds, const ExperimentConfig& cfg) {
  ds.validate();
  const KRange range = k_range(cfg, ds.n());
  const std::vector<double> grid = threshold_grid(cfg.t_min, cfg.t_max, cfg.t_step);
  const int max_sweeps = effective_max_sweeps(cfg, ds.n());
  const SimilarityGraph graph = induce_graph(ds, cfg.metric);

  const int tcount = static_cast<int>(grid.size());
  const int total = tcount * range.count();
  std::vector<SweepRow> rows(static_cast<std::size_t>(total));
  // report order: t-major; cell seeds identical to select_threshold_and_k
  detail::parallel_for(total, [&](int ci) {
    const int ti = ci / range.count();
    const int K = range.lo + ci % range.count();
    SweepRow& row = rows[static_cast<std::size_t>(ci)];
    row.t = grid[static_cast<std::size_t>(ti)];
    row.k = K;
    const BinaryGraph bg = apply_threshold(graph, row.t);
    const FitResult fit = sbm_fit(bg, K, cfg.restarts, max_sweeps, cell_seed(cfg.seed, ti, K));
    row.silhouette = score_cell(ds, fit.partition, cfg.silhouette_metric);
    row.nmi = ds.has_labels() ? nmi(ds.labels, fit.partition.z).nmi : kNaN;
  });
  return rows;
}

std::vector<ExperimentResult> run_benchmark(const std::vector<ExperimentConfig>& configs) {
  std::vector<ExperimentResult> results;
  results.reserve(configs.size());
  for (const ExperimentConfig& cfg : configs) {
    try {
      const Dataset ds = load_dataset(cfg);
      results.push_back(cfg.method == Method::sbm ? select_threshold_and_k(ds, cfg)
                                                  : select_k(ds, cfg));
    } catch (const std::exception& e) {
      ExperimentResult r;
      r.config = cfg;
      r.failed = true;
      r.error = e.what();
      r.silhouette = kNaN;
      r.nmi = kNaN;
      r.ari = kNaN;
      r.threshold = kNaN;
      results.push_back(std::move(r));
    }
  }
  return results;
}

namespace {

std::string fmt_score(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmt_threshold(double v) {
  if (std::isnan(v) || v < 0.0) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

bool metric_applies(Method m) { return m == Method::sbm || m == Method::wsbm; }

}  // namespace

std::string emit_table(const std::vector<ExperimentResult>& results, TableFormat format) {
  std::string out;
  if (format == TableFormat::csv) {
    out += "dataset,method,metric,silhouette,nmi,ari,clusters,threshold,seed\n";
    for (const auto& r : results) {
      out += csv_field(r.config.dataset);
      out += ",";
      out += to_string(r.config.method);
      out += ",";
      out += metric_applies(r.config.method) ? to_string(r.config.metric) : "";
      out += ",";
      if (!r.failed) {
        out += fmt_score(r.silhouette) + "," + fmt_score(r.nmi) + "," + fmt_score(r.ari) +
               "," + std::to_string(r.clusters) + "," + fmt_threshold(r.threshold);
      } else {
        out += ",,,,";
      }
      out += "," + std::to_string(r.config.seed) + "\n";
    }
  } else {
    out += "| Dataset | Method | Silhouette | NMI | ARI | Clusters |\n";
    out += "| --- | --- | --- | --- | --- | --- |\n";
    for (const auto& r : results) {
      std::string method = to_string(r.config.method);
      if (metric_applies(r.config.method))
        method += std::string(" (") + to_string(r.config.metric) + ")";
      if (r.failed) {
        out += "| " + r.config.dataset + " | " + method + " | error: " + r.error +
               " | | | |\n";
        continue;
      }
      out += "| " + r.config.dataset + " | " + method + " | " + fmt_score(r.silhouette) +
             " | " + fmt_score(r.nmi) + " | " + fmt_score(r.ari) + " | " +
             std::to_string(r.clusters) + " |\n";
    }
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "t,k,silhouette,nmi\n";
  char buf[96];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%g,%d,%.6f,", row.t, row.k, row.silhouette);
    out += buf;
    if (!std::isnan(row.nmi)) {
      std::snprintf(buf, sizeof(buf), "%.6f", row.nmi);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string labels_csv(const std::vector<int>& labels) {
  std::string out = "index,label\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out += std::to_string(i) + "," + std::to_string(labels[i]) + "\n";
  return out;
}

}  // namespace blockcluster
