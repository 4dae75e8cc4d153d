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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "blockcluster/errors.hpp"
#include "blockcluster/harness.hpp"
#include "blockcluster/metrics.hpp"
#include "blockcluster/sbm.hpp"
#include "blockcluster/wsbm.hpp"

namespace {

using namespace blockcluster;

// exit codes: 0 ok, 1 config error, 2 data error, 3 no valid clustering
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitNoClustering = 3;

struct CommonOpts {
  std::string dataset;
  std::string label_column;
  std::string method = "wsbm";
  std::string metric = "manhattan";
  std::string scaling = "none";
  std::string format = "csv";
  double alpha = 0.0;
  int k_min = 2;
  int k_max = 40;
  double t_min = 0.05;
  double t_max = 0.95;
  double t_step = 0.05;
  int restarts = 10;
  int max_sweeps = 0;
  std::uint64_t seed = 1;
  int gen_n = 0;
  double gen_noise = 0.05;
  std::uint64_t gen_seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--dataset", o.dataset, "two_moons|circles|ina or a CSV path");
  cmd->add_option("--label-column", o.label_column,
                  "CSV column holding ground-truth classes (name or 0-based index)");
  cmd->add_option("--method", o.method, "kmeans|ward|sbm|wsbm")
      ->check(CLI::IsMember({"kmeans", "ward", "sbm", "wsbm"}));
  cmd->add_option("--metric", o.metric, "chebyshev|manhattan|euclidean")
      ->check(CLI::IsMember({"chebyshev", "manhattan", "euclidean"}));
  cmd->add_option("--scaling", o.scaling, "none|minmax|zscore")
      ->check(CLI::IsMember({"none", "minmax", "zscore"}));
  cmd->add_option("--format", o.format, "csv|markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  cmd->add_option("--alpha", o.alpha, "wsbm existence/weight balance in [0,1]");
  cmd->add_option("--k-min", o.k_min, "smallest cluster count");
  cmd->add_option("--k-max", o.k_max, "largest cluster count (clipped to n-1)");
  cmd->add_option("--t-min", o.t_min, "threshold grid start (sbm)");
  cmd->add_option("--t-max", o.t_max, "threshold grid end (sbm)");
  cmd->add_option("--t-step", o.t_step, "threshold grid step (sbm)");
  cmd->add_option("--restarts", o.restarts, "independent random starts per fit");
  cmd->add_option("--max-sweeps", o.max_sweeps, "greedy pass budget (0 = 4n)");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--n", o.gen_n, "synthetic dataset size (0 = default)");
  cmd->add_option("--noise", o.gen_noise, "synthetic dataset noise stddev");
  cmd->add_option("--gen-seed", o.gen_seed, "synthetic generator seed (0 = --seed)");
}

ExperimentConfig to_config(const CommonOpts& o) {
  ExperimentConfig cfg;
  cfg.dataset = o.dataset;
  cfg.label_column = o.label_column;
  cfg.method = method_from_string(o.method);
  cfg.metric = metric_from_string(o.metric);
  cfg.scaling = scaling_from_string(o.scaling);
  cfg.alpha = o.alpha;
  cfg.k_min = o.k_min;
  cfg.k_max = o.k_max;
  cfg.t_min = o.t_min;
  cfg.t_max = o.t_max;
  cfg.t_step = o.t_step;
  cfg.restarts = o.restarts;
  cfg.max_sweeps = o.max_sweeps;
  cfg.seed = o.seed;
  cfg.gen_n = o.gen_n;
  cfg.gen_noise = o.gen_noise;
  cfg.gen_seed = o.gen_seed;
  return cfg;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tabular clustering with stochastic block models on induced similarity graphs"};
  app.require_subcommand(1);

  CommonOpts gen_opts, run_opts, sweep_opts, bench_opts;
  std::string gen_out = "-";
  std::string run_labels_out, run_graph_out, sweep_out = "-", bench_out = "-";
  std::vector<std::string> bench_datasets, bench_methods, bench_metrics;

  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic dataset as CSV");
  add_common(gen, gen_opts);
  gen->add_option("--out", gen_out, "output CSV path (- for stdout)");

  CLI::App* run = app.add_subcommand("run", "Run one configuration with model selection");
  add_common(run, run_opts);
  run->add_option("--labels-out", run_labels_out, "write chosen labels as index,label CSV");
  run->add_option("--export-graph", run_graph_out, "write the induced graph as i,j,weight");

  CLI::App* sweep = app.add_subcommand("sweep", "Threshold/K score table for the sbm");
  add_common(sweep, sweep_opts);
  sweep->add_option("--out", sweep_out, "output CSV path (- for stdout)");

  CLI::App* bench = app.add_subcommand("bench", "Run a dataset x method grid");
  add_common(bench, bench_opts);
  bench->add_option("--datasets", bench_datasets, "datasets (repeatable)")->required();
  bench->add_option("--methods", bench_methods, "methods (default: all four)");
  bench->add_option("--out", bench_out, "output path (- for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (gen_opts.dataset.empty()) throw std::invalid_argument("--dataset is required");
      ExperimentConfig cfg = to_config(gen_opts);
      const Dataset ds = load_dataset(cfg);
      if (gen_out == "-") {
        for (int j = 0; j < ds.d(); ++j) std::cout << (j ? ",f" : "f") << j;
        if (ds.has_labels()) std::cout << ",class";
        std::cout << "\n";
        char buf[32];
        for (int i = 0; i < ds.n(); ++i) {
          for (int j = 0; j < ds.d(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", ds.features(i, j));
            std::cout << (j ? "," : "") << buf;
          }
          if (ds.has_labels())
            std::cout << "," << ds.label_names[static_cast<std::size_t>(
                                   ds.labels[static_cast<std::size_t>(i)])];
          std::cout << "\n";
        }
      } else {
        write_csv(ds, gen_out);
      }
      return 0;
    }

    if (run->parsed()) {
      if (run_opts.dataset.empty()) throw std::invalid_argument("--dataset is required");
      ExperimentConfig cfg = to_config(run_opts);
      const Dataset ds = load_dataset(cfg);
      if (!run_graph_out.empty()) {
        const SimilarityGraph g = induce_graph(ds, cfg.metric);
        std::ofstream out(run_graph_out);
        if (!out) throw DataError("cannot write file: " + run_graph_out);
        write_edge_list(g, out);
      }
      const ExperimentResult result = cfg.method == Method::sbm
                                          ? select_threshold_and_k(ds, cfg)
                                          : select_k(ds, cfg);
      if (!run_labels_out.empty()) write_text(run_labels_out, labels_csv(result.labels));
      std::cout << emit_table({result}, run_opts.format == "markdown"
                                            ? TableFormat::markdown
                                            : TableFormat::csv);
      std::cerr << "wall_seconds=" << result.wall_seconds << "\n";
      return 0;
    }

    if (sweep->parsed()) {
      if (sweep_opts.dataset.empty()) throw std::invalid_argument("--dataset is required");
      ExperimentConfig cfg = to_config(sweep_opts);
      cfg.method = Method::sbm;
      const Dataset ds = load_dataset(cfg);
      write_text(sweep_out, sweep_csv(sweep_report(ds, cfg)));
      return 0;
    }

    if (bench->parsed()) {
      if (bench_methods.empty()) bench_methods = {"kmeans", "ward", "sbm", "wsbm"};
      std::vector<ExperimentConfig> configs;
      for (const std::string& data : bench_datasets)
        for (const std::string& method : bench_methods) {
          ExperimentConfig cfg = to_config(bench_opts);
          cfg.dataset = data;
          cfg.method = method_from_string(method);
          configs.push_back(cfg);
        }
      const auto results = run_benchmark(configs);
      write_text(bench_out, emit_table(results, bench_opts.format == "markdown"
                                                    ? TableFormat::markdown
                                                    : TableFormat::csv));
      for (const auto& r : results)
        if (r.failed)
          std::cerr << r.config.dataset << "/" << to_string(r.config.method)
                    << " failed: " << r.error << "\n";
      return 0;
    }
  } catch (const NoValidClusteringError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoClustering;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
