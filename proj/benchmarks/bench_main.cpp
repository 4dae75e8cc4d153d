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

#include <benchmark/benchmark.h>

#include "blockcluster/baselines.hpp"
#include "blockcluster/dataset.hpp"
#include "blockcluster/metrics.hpp"
#include "blockcluster/sbm.hpp"
#include "blockcluster/similarity.hpp"
#include "blockcluster/wsbm.hpp"

#ifndef BLOCKCLUSTER_DATA_DIR
#define BLOCKCLUSTER_DATA_DIR "."
#endif

namespace {

using namespace blockcluster;

const Dataset& iris() {
  static const Dataset ds =
      load_csv(std::string(BLOCKCLUSTER_DATA_DIR) + "/iris.csv", std::string("class"));
  return ds;
}

void BM_InduceGraph(benchmark::State& state) {
  const Dataset& ds = iris();
  for (auto _ : state) {
    benchmark::DoNotOptimize(induce_graph(ds, Metric::manhattan));
  }
}
BENCHMARK(BM_InduceGraph);

void BM_WsbmLogLikelihood(benchmark::State& state) {
  const SimilarityGraph g = induce_graph(iris(), Metric::manhattan);
  Partition p{std::vector<int>(static_cast<std::size_t>(g.n()), 0), 2};
  for (int i = 0; i < g.n(); i += 2) p.z[static_cast<std::size_t>(i)] = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wsbm_log_likelihood(g, p, 0.0));
  }
}
BENCHMARK(BM_WsbmLogLikelihood);

void BM_WsbmFit(benchmark::State& state) {
  const SimilarityGraph g = induce_graph(iris(), Metric::manhattan);
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wsbm_fit(g, K, 0.0, 1, 4 * g.n(), 1));
  }
}
BENCHMARK(BM_WsbmFit)->Arg(2)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SbmFit(benchmark::State& state) {
  const SimilarityGraph g = induce_graph(iris(), Metric::manhattan);
  const BinaryGraph bg = apply_threshold(g, 0.2);
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sbm_fit(bg, K, 1, 4 * bg.n(), 1));
  }
}
BENCHMARK(BM_SbmFit)->Arg(2)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Silhouette(benchmark::State& state) {
  const Dataset& ds = iris();
  const Partition p = ward_fit(ds, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(silhouette(ds, p, Metric::euclidean));
  }
}
BENCHMARK(BM_Silhouette);

void BM_WardFit(benchmark::State& state) {
  const Dataset ds = gen_ina(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ward_fit(ds, 3));
  }
}
BENCHMARK(BM_WardFit)->Arg(150)->Arg(660)->Unit(benchmark::kMillisecond);

void BM_KmeansFit(benchmark::State& state) {
  const Dataset& ds = iris();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kmeans_fit(ds, 3, 10, 300, 1e-4, 1));
  }
}
BENCHMARK(BM_KmeansFit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
