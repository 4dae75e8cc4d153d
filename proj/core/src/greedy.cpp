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

#include "blockcluster/detail/greedy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace blockcluster::detail {

namespace {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// x * ln(x) for integer-valued x, with the 0 * log(0) = 0 convention.
std::vector<double> build_xlx(std::size_t max_value) {
  std::vector<double> t(max_value + 1);
  t[0] = 0.0;
  for (std::size_t v = 1; v <= max_value; ++v) {
    const double x = static_cast<double>(v);
    t[v] = x * std::log(x);
  }
  return t;
}

// Profile Bernoulli likelihood contribution of one block pair with `npairs`
// possible dyads and `edges` present ones:
//   m log(m/n) + (n-m) log(1 - m/n) = xlx(m) + xlx(n-m) - xlx(n).
// All statistics are integer-valued doubles, so everything is a table lookup.
struct BernoulliTerms {
  const double* xlx;

  static constexpr bool kBatchedScan = false;

  void on_counts_changed(const Eigen::ArrayXd&) {}

  bool pair_ok(double, double) const { return true; }

  double term(double npairs, double edges) const {
    if (npairs <= 0.0) return 0.0;
    const auto n = static_cast<std::size_t>(npairs);
    const auto m = static_cast<std::size_t>(edges);
    return xlx[m] + xlx[n - m] - xlx[n];
  }

  // Terms of a whole block-pair row after removing (sign -1) or adding
  // (sign +1) one node whose per-block statistics are `si`; `factor` is the
  // source/target block size after the move.
  bool row_terms(double factor, const double* prow, const double* si, double sign,
                 const Eigen::ArrayXd& cnt, double* out, int k) {
    if (factor < 1.0) {
      std::fill(out, out + k, 0.0);
      return true;
    }
    for (int c = 0; c < k; ++c) out[c] = term(factor * cnt[c], prow[c] + sign * si[c]);
    return true;
  }
};

// Profile exponential likelihood contribution of one block pair:
//   N log(N / W) - N,
// scaled by a constant factor (the (1 - alpha) mixing weight). Rows use the
// factorization ln N = ln(factor) + ln(cnt[c]), so the only transcendental is
// a vectorized log over the weight sums; ln(cnt) is cached per block.
struct ExponentialTerms {
  const double* xlx;
  double scale;
  Eigen::ArrayXd lncnt;
  Eigen::ArrayXd wraw;
  Eigen::ArrayXd logw;

  static constexpr bool kBatchedScan = true;

  void on_counts_changed(const Eigen::ArrayXd& cnt) {
    lncnt = (cnt > 0.0).select(cnt, 1.0).log();
  }

  bool pair_ok(double npairs, double wsum) const {
    return npairs <= 0.0 || wsum >= kMinPairWeight;
  }

  double term(double npairs, double wsum) const {
    if (npairs <= 0.0) return 0.0;
    const auto n = static_cast<std::size_t>(npairs);
    return scale * (xlx[n] - npairs * std::log(wsum) - npairs);
  }

  bool row_terms(double factor, const double* prow, const double* si, double sign,
                 const Eigen::ArrayXd& cnt, double* out, int k) {
    if (factor < 1.0) {
      std::fill(out, out + k, 0.0);
      return true;
    }
    Eigen::Map<const Eigen::ArrayXd> p(prow, k);
    Eigen::Map<const Eigen::ArrayXd> s(si, k);
    Eigen::Map<Eigen::ArrayXd> o(out, k);
    auto occupied = cnt.head(k) > 0.0;
    wraw.head(k) = p + sign * s;
    if ((occupied && (wraw.head(k) < kMinPairWeight)).any()) return false;
    logw.head(k) = occupied.select(wraw.head(k), 1.0).log();
    const double lnfac = std::log(factor);
    o = (scale * factor) * cnt.head(k) * ((lnfac - 1.0) + lncnt.head(k) - logw.head(k));
    return true;
  }
};

template <class Terms>
class GreedySearch {
public:
  GreedySearch(const Eigen::MatrixXd& aff, int K, Terms terms)
      : aff_(aff),
        n_(static_cast<int>(aff.rows())),
        k_(K),
        terms_(std::move(terms)),
        cnt_(Eigen::ArrayXd::Zero(K)),
        S_(RowMajorMatrix::Zero(aff.rows(), K)),
        P_(RowMajorMatrix::Zero(K, K)),
        T_(RowMajorMatrix::Zero(K, K)),
        trow_(Eigen::ArrayXd::Zero(K)),
        ta_(Eigen::ArrayXd::Zero(K)),
        tb_(Eigen::ArrayXd::Zero(K)) {}

  void init(std::vector<int> z) {
    z_ = std::move(z);
    cnt_.setZero();
    S_.setZero();
    for (int j = 0; j < n_; ++j) {
      cnt_[z_[static_cast<std::size_t>(j)]] += 1.0;
      S_.col(z_[static_cast<std::size_t>(j)]) += aff_.col(j);
    }
    rebuild_pair_stats();
  }

  int run(int max_sweeps, GreedyTrace* trace) {
    if (trace) trace->initial = z_;
    int pass = 0;
    while (pass < max_sweeps) {
      ++pass;
      int node = -1, target = -1;
      bool found;
      if constexpr (Terms::kBatchedScan)
        found = scan_batched(node, target);
      else
        found = scan(node, target);
      if (!found) break;
      if (trace) trace->moves.push_back({node, z_[static_cast<std::size_t>(node)], target});
      apply(node, target);
    }
    return pass;
  }

  const std::vector<int>& assignment() const { return z_; }

private:
  double npairs(int r, int c) const {
    return r == c ? cnt_[r] * (cnt_[r] - 1.0) / 2.0 : cnt_[r] * cnt_[c];
  }

  void rebuild_pair_stats() {
    P_.setZero();
    for (int i = 0; i < n_; ++i) P_.row(z_[static_cast<std::size_t>(i)]) += S_.row(i);
    P_.diagonal() /= 2.0;  // within-block edges were accumulated from both ends
    for (int r = 0; r < k_; ++r)
      for (int c = r + 1; c < k_; ++c) P_(c, r) = P_(r, c);  // keep exactly symmetric
    terms_.on_counts_changed(cnt_);
    for (int r = 0; r < k_; ++r)
      for (int c = 0; c < k_; ++c) T_(r, c) = terms_.term(npairs(r, c), P_(r, c));
    for (int r = 0; r < k_; ++r) trow_[r] = T_.row(r).sum();
  }

  // One steepest-ascent pass: finds the single (node, block) relabeling with
  // the largest likelihood gain above kMinGain. Ties keep the first candidate
  // in (node, block) scan order.
  bool scan(int& best_node, int& best_target) {
    double best_delta = kMinGain;
    bool found = false;
    for (int i = 0; i < n_; ++i) {
      const int a = z_[static_cast<std::size_t>(i)];
      const double na = cnt_[a];
      const double* si = S_.row(i).data();

      // row a with node i removed; entry [a] needs the within-block form and
      // entry [b] is corrected per candidate below
      if (!terms_.row_terms(na - 1.0, P_.row(a).data(), si, -1.0, cnt_, ta_.data(), k_))
        continue;
      ta_[a] = terms_.term((na - 1.0) * (na - 2.0) / 2.0, P_(a, a) - si[a]);
      const double rem_base = ta_.sum() - trow_[a];

      for (int b = 0; b < k_; ++b) {
        if (b == a) continue;
        const double nb = cnt_[b];
        if (!terms_.row_terms(nb + 1.0, P_.row(b).data(), si, 1.0, cnt_, tb_.data(), k_))
          continue;
        tb_[b] = terms_.term((nb + 1.0) * nb / 2.0, P_(b, b) + si[b]);
        const double sumb = tb_.sum() - tb_[a];
        // pair {a, b} combines the removal and the addition
        const double ncomb = (na - 1.0) * (nb + 1.0);
        const double wcomb = P_(a, b) - si[b] + si[a];
        if (!terms_.pair_ok(ncomb, wcomb)) continue;
        const double delta = rem_base - ta_[b] + terms_.term(ncomb, wcomb) + sumb -
                             trow_[b] + T_(a, b);
        if (delta > best_delta) {
          best_delta = delta;
          best_node = i;
          best_target = b;
          found = true;
        }
      }
    }
    return found;
  }

  // Same scan with all K-1 candidate rows of one node evaluated as one K x K
  // batch (exponential model only). Per pass, the count-dependent pieces
  // (ln(cnt), ln(cnt+1), the pair-count outer product) are hoisted out of the
  // node loop; per node the only K x K transcendental is a single log.
  bool scan_batched(int& best_node, int& best_target);

  void apply(int i, int b) {
    const int a = z_[static_cast<std::size_t>(i)];
    S_.col(a) -= aff_.col(i);
    S_.col(b) += aff_.col(i);
    cnt_[a] -= 1.0;
    cnt_[b] += 1.0;
    z_[static_cast<std::size_t>(i)] = b;
    rebuild_pair_stats();
  }

  const Eigen::MatrixXd& aff_;
  int n_;
  int k_;
  Terms terms_;
  std::vector<int> z_;
  Eigen::ArrayXd cnt_;
  RowMajorMatrix S_;   // S(i, c) = total affinity between node i and block c
  RowMajorMatrix P_;   // unordered pair statistic per block pair (symmetric)
  RowMajorMatrix T_;   // cached per-pair likelihood terms
  Eigen::ArrayXd trow_;
  Eigen::ArrayXd ta_, tb_;
  // scratch for the batched scan
  RowMajorMatrix wm_, lm_, tm_, lnsum_, outer_;
  Eigen::ArrayXd lnf_, rowsum_, dterm_, tcomb_, wdiag_, wcomb_, scratch_;
  Eigen::Array<bool, Eigen::Dynamic, 1> badrow_;
};

template <class Terms>
bool GreedySearch<Terms>::scan_batched(int& best_node, int& best_target) {
  const double scale = terms_.scale;
  if (scale == 0.0) return false;  // every term vanishes; no move can improve
  if (wm_.rows() != k_) {
    wm_.resize(k_, k_);
    lm_.resize(k_, k_);
    tm_.resize(k_, k_);
    lnsum_.resize(k_, k_);
    outer_.resize(k_, k_);
    lnf_.resize(k_);
    rowsum_.resize(k_);
    dterm_.resize(k_);
    tcomb_.resize(k_);
    wdiag_.resize(k_);
    wcomb_.resize(k_);
    scratch_.resize(k_);
    badrow_.resize(k_);
  }
  const auto& lncnt = terms_.lncnt;
  // per-pass invariants: counts only change when a move is applied
  lnf_ = (cnt_ + 1.0).log();
  // lnsum(b,c) = ln(cnt[b]+1) + ln(cnt[c]) - 1; outer(b,c) = scale (cnt[b]+1) cnt[c]
  lnsum_.colwise() = (lnf_ - 1.0).matrix();
  lnsum_.array().rowwise() += lncnt.transpose();
  outer_ = (scale * (cnt_ + 1.0)).matrix() * cnt_.matrix().transpose();
  std::vector<int> empty_blocks;
  for (int c = 0; c < k_; ++c)
    if (cnt_[c] <= 0.0) empty_blocks.push_back(c);

  double best_delta = kMinGain;
  bool found = false;
  for (int i = 0; i < n_; ++i) {
    const int a = z_[static_cast<std::size_t>(i)];
    const double na = cnt_[a];
    const double* si = S_.row(i).data();
    Eigen::Map<const Eigen::ArrayXd> simap(si, k_);

    if (!terms_.row_terms(na - 1.0, P_.row(a).data(), si, -1.0, cnt_, ta_.data(), k_))
      continue;
    ta_[a] = terms_.term((na - 1.0) * (na - 2.0) / 2.0, P_(a, a) - si[a]);
    const double rem_base = ta_.sum() - trow_[a];

    // candidate weight sums W'(b,c) = P(b,c) + S(i,c)
    wm_.array() = P_.array().rowwise() + simap.transpose();
    for (int c : empty_blocks) wm_.col(c).setOnes();  // keeps the log finite
    badrow_ = (wm_.array() < kMinPairWeight).rowwise().any();
    lm_ = wm_.array().log();
    tm_.array() = outer_.array() * (lnsum_.array() - lm_.array());
    rowsum_ = tm_.rowwise().sum();

    // within-block term of the target: N = (cnt[b]+1) cnt[b] / 2
    wdiag_ = P_.diagonal().array() + simap;
    badrow_ = badrow_ || ((cnt_ > 0.0) && (wdiag_ < kMinPairWeight));
    scratch_ = (cnt_ > 0.0).select(wdiag_, 1.0).log();
    dterm_ = (0.5 * scale) * (cnt_ + 1.0) * cnt_ *
             (lnf_ + lncnt - std::numbers::ln2 - 1.0 - scratch_);

    // combined {a, b} pair: N = (na-1)(cnt[b]+1), W = P(a,b) - S(i,b) + S(i,a)
    if (na - 1.0 >= 1.0) {
      wcomb_ = P_.row(a).transpose().array() - simap + si[a];
      wcomb_[a] = 1.0;  // candidate b == a is never taken
      badrow_ = badrow_ || (wcomb_ < kMinPairWeight);
      const double lnna = std::log(na - 1.0);
      tcomb_ = (scale * (na - 1.0)) * (cnt_ + 1.0) * (lnna + lnf_ - 1.0 - wcomb_.log());
    } else {
      tcomb_.setZero();
    }

    // delta(b); entries at b == a are skipped below
    scratch_ = rem_base - ta_ + tcomb_ + rowsum_ - tm_.col(a).array() -
               tm_.diagonal().array() + dterm_ - trow_ + T_.row(a).transpose().array();
    for (int b = 0; b < k_; ++b) {
      if (b == a || badrow_[b]) continue;
      if (scratch_[b] > best_delta) {
        best_delta = scratch_[b];
        best_node = i;
        best_target = b;
        found = true;
      }
    }
  }
  return found;
}

std::vector<int> random_assignment(int n, int K, Rng& rng) {
  std::vector<int> z(static_cast<std::size_t>(n));
  for (auto& v : z) v = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(K)));
  return z;
}

template <class Terms>
GreedyOutcome run_search(const Eigen::MatrixXd& aff, int K, int max_sweeps, Rng& rng,
                         Terms terms, GreedyTrace* trace) {
  const int n = static_cast<int>(aff.rows());
  if (K < 1 || K > n) throw std::invalid_argument("K must lie in [1, n]");
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
  GreedySearch<Terms> search(aff, K, std::move(terms));
  search.init(random_assignment(n, K, rng));
  GreedyOutcome out;
  out.passes = search.run(max_sweeps, trace);
  out.z = search.assignment();
  return out;
}

}  // namespace

GreedyOutcome greedy_bernoulli(const Eigen::MatrixXd& adjacency, int K, int max_sweeps,
                               Rng& rng, GreedyTrace* trace) {
  const auto n = static_cast<std::size_t>(adjacency.rows());
  const auto xlx = build_xlx(n * (n - 1) / 2 + 1);
  return run_search(adjacency, K, max_sweeps, rng, BernoulliTerms{xlx.data()}, trace);
}

GreedyOutcome greedy_exponential(const Eigen::MatrixXd& weights, int K, int max_sweeps,
                                 Rng& rng, double scale, GreedyTrace* trace) {
  if (scale < 0.0) throw std::invalid_argument("scale must be >= 0");
  const auto n = static_cast<std::size_t>(weights.rows());
  const auto xlx = build_xlx(n * (n - 1) / 2 + 1);
  ExponentialTerms terms{xlx.data(), scale, Eigen::ArrayXd::Zero(K), Eigen::ArrayXd::Zero(K),
                         Eigen::ArrayXd::Zero(K)};
  return run_search(weights, K, max_sweeps, rng, std::move(terms), trace);
}

}  // namespace blockcluster::detail
