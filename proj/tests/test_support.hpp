#pragma once

// Shared fixtures and definition-level oracles for the test suites. The
// evaluators here are deliberately written as direct transcriptions of the
// definitions (per-pair / per-edge sums, joint-entropy mutual information,
// explicit pair counting) so they stay independent of the grouped-statistics
// implementations they check.

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockcluster/dataset.hpp"
#include "blockcluster/random.hpp"
#include "blockcluster/similarity.hpp"

#ifndef BLOCKCLUSTER_DATA_DIR
#define BLOCKCLUSTER_DATA_DIR "."
#endif

namespace testsupport {

inline std::string data_path(const std::string& file) {
  return std::string(BLOCKCLUSTER_DATA_DIR) + "/" + file;
}

inline blockcluster::Dataset iris() {
  return blockcluster::load_csv(data_path("iris.csv"), std::string("class"));
}

// ---------------------------------------------------------------------------
// graph builders

inline blockcluster::BinaryGraph graph_from_edges(int n,
                                                  const std::vector<std::pair<int, int>>& edges) {
  blockcluster::BinaryGraph g;
  g.adjacency = Eigen::MatrixXd::Zero(n, n);
  g.threshold = 0.5;
  for (auto [i, j] : edges) {
    g.adjacency(i, j) = 1.0;
    g.adjacency(j, i) = 1.0;
  }
  return g;
}

inline blockcluster::BinaryGraph erdos_renyi(int n, double p, std::uint64_t seed) {
  blockcluster::Rng rng(seed);
  blockcluster::BinaryGraph g;
  g.adjacency = Eigen::MatrixXd::Zero(n, n);
  g.threshold = 0.5;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < p) {
        g.adjacency(i, j) = 1.0;
        g.adjacency(j, i) = 1.0;
      }
  return g;
}

// two balanced planted blocks: first half vs second half
inline std::vector<int> planted_halves(int n) {
  std::vector<int> z(static_cast<std::size_t>(n), 0);
  for (int i = n / 2; i < n; ++i) z[static_cast<std::size_t>(i)] = 1;
  return z;
}

inline blockcluster::BinaryGraph planted_bernoulli(int n, double theta_in, double theta_out,
                                                   std::uint64_t seed) {
  blockcluster::Rng rng(seed);
  const std::vector<int> z = planted_halves(n);
  blockcluster::BinaryGraph g;
  g.adjacency = Eigen::MatrixXd::Zero(n, n);
  g.threshold = 0.5;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double p = z[static_cast<std::size_t>(i)] == z[static_cast<std::size_t>(j)]
                           ? theta_in
                           : theta_out;
      if (rng.uniform() < p) {
        g.adjacency(i, j) = 1.0;
        g.adjacency(j, i) = 1.0;
      }
    }
  return g;
}

// complete graph with exponential weights; rate_in within the planted halves,
// rate_out across
inline blockcluster::SimilarityGraph planted_exponential(int n, double rate_in,
                                                         double rate_out,
                                                         std::uint64_t seed) {
  blockcluster::Rng rng(seed);
  const std::vector<int> z = planted_halves(n);
  blockcluster::SimilarityGraph g;
  g.weights = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double rate = z[static_cast<std::size_t>(i)] == z[static_cast<std::size_t>(j)]
                              ? rate_in
                              : rate_out;
      const double w = rng.exponential(rate);
      g.weights(i, j) = w;
      g.weights(j, i) = w;
    }
  return g;
}

inline blockcluster::SimilarityGraph random_similarity_graph(int n, std::uint64_t seed) {
  blockcluster::Rng rng(seed);
  blockcluster::SimilarityGraph g;
  g.weights = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double w = 1.0 - rng.uniform();  // (0, 1]
      g.weights(i, j) = w;
      g.weights(j, i) = w;
    }
  return g;
}

// ---------------------------------------------------------------------------
// independent likelihood evaluators

// Bernoulli profile likelihood summed pair by pair (not grouped by block).
inline double per_pair_bernoulli_ll(const blockcluster::BinaryGraph& g,
                                    const std::vector<int>& z, int k) {
  const int n = g.n();
  std::vector<std::vector<double>> edges(static_cast<std::size_t>(k),
                                         std::vector<double>(static_cast<std::size_t>(k), 0.0));
  auto pairs = edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int r = std::min(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
      const int s = std::max(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
      pairs[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] += 1.0;
      if (g.edge(i, j)) edges[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] += 1.0;
    }
  double ll = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int r = std::min(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
      const int s = std::max(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
      const double theta = edges[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] /
                           pairs[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      if (g.edge(i, j)) {
        if (theta > 0.0) ll += std::log(theta);
      } else {
        if (theta < 1.0) ll += std::log(1.0 - theta);
      }
    }
  return ll;
}

// Exponential-weight profile likelihood summed edge by edge.
inline double per_edge_exponential_ll(const blockcluster::SimilarityGraph& g,
                                      const std::vector<int>& z, int k) {
  const int n = g.n();
  std::vector<std::vector<double>> wsum(static_cast<std::size_t>(k),
                                        std::vector<double>(static_cast<std::size_t>(k), 0.0));
  auto pairs = wsum;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int r = std::min(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
      const int s = std::max(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
      wsum[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] += g.weights(i, j);
      pairs[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] += 1.0;
    }
  double ll = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int r = std::min(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
      const int s = std::max(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
      const double rate = pairs[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] /
                          wsum[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      ll += std::log(rate) - rate * g.weights(i, j);
    }
  return ll;
}

// every assignment of n items to blocks 0..K-1 (K^n of them)
inline void all_assignments(int n, int K, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> z(static_cast<std::size_t>(n), 0);
  for (;;) {
    fn(z);
    int i = n - 1;
    while (i >= 0 && z[static_cast<std::size_t>(i)] == K - 1) {
      z[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++z[static_cast<std::size_t>(i)];
  }
}

// ---------------------------------------------------------------------------
// definition-level external index oracles

// mutual information via I = H(T) + H(C) - H(T,C)
inline double nmi_oracle(const std::vector<int>& t, const std::vector<int>& c) {
  const double n = static_cast<double>(t.size());
  int kt = 0, kc = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    kt = std::max(kt, t[i] + 1);
    kc = std::max(kc, c[i] + 1);
  }
  auto entropy = [n](const std::vector<double>& counts) {
    double h = 0.0;
    for (double v : counts)
      if (v > 0.0) h -= v / n * std::log(v / n);
    return h;
  };
  std::vector<double> ct(static_cast<std::size_t>(kt), 0.0);
  std::vector<double> cc(static_cast<std::size_t>(kc), 0.0);
  std::vector<double> joint(static_cast<std::size_t>(kt * kc), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    ct[static_cast<std::size_t>(t[i])] += 1.0;
    cc[static_cast<std::size_t>(c[i])] += 1.0;
    joint[static_cast<std::size_t>(t[i] * kc + c[i])] += 1.0;
  }
  const double ht = entropy(ct);
  const double hc = entropy(cc);
  const double hj = entropy(joint);
  const double mi = ht + hc - hj;
  if (ht + hc <= 0.0) return 1.0;
  return 2.0 * mi / (ht + hc);
}

// adjusted Rand via explicit pair categories
inline double ari_oracle(const std::vector<int>& t, const std::vector<int>& c) {
  double ss = 0.0, sd = 0.0, ds = 0.0, dd = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const bool same_t = t[i] == t[j];
      const bool same_c = c[i] == c[j];
      if (same_t && same_c)
        ss += 1.0;
      else if (same_t)
        sd += 1.0;
      else if (same_c)
        ds += 1.0;
      else
        dd += 1.0;
    }
  const double denom = (ss + sd) * (sd + dd) + (ss + ds) * (ds + dd);
  if (denom == 0.0) return 1.0;
  return 2.0 * (ss * dd - sd * ds) / denom;
}

// uniformly random relabeling (permutation of entries) of a label vector
inline std::vector<int> shuffled(const std::vector<int>& labels, blockcluster::Rng& rng) {
  std::vector<int> out = labels;
  for (std::size_t i = out.size(); i > 1; --i)
    std::swap(out[i - 1], out[rng.uniform_index(i)]);
  return out;
}

inline blockcluster::Dataset two_blobs(int per_blob, double spread, double gap,
                                       std::uint64_t seed) {
  blockcluster::Rng rng(seed);
  blockcluster::Dataset ds;
  ds.name = "two_blobs";
  const int n = 2 * per_blob;
  ds.features.resize(n, 2);
  ds.labels.resize(static_cast<std::size_t>(n));
  ds.label_names = {"0", "1"};
  for (int i = 0; i < n; ++i) {
    const int blob = i < per_blob ? 0 : 1;
    ds.features(i, 0) = blob * gap + rng.normal() * spread;
    ds.features(i, 1) = blob * gap + rng.normal() * spread;
    ds.labels[static_cast<std::size_t>(i)] = blob;
  }
  return ds;
}

}  // namespace testsupport
