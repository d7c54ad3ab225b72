// Copyright 2026 The Pufferfish Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pufferfish/max_influence.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace pufferfish {
namespace {

constexpr double kStationaryTolerance = 1e-9;
constexpr long kMaxEnumeration = 1'000'000;

// log(num / den) with the conventions used throughout: a zero numerator
// contributes nothing (-inf), a zero denominator alone is +inf.
double LogRatio(double num, double den) {
  if (num <= 0.0) return -kInfinity;
  if (den <= 0.0) return kInfinity;
  return std::log(num / den);
}

// Row-stochastic check after every product.
absl::Status CheckRows(const Matrix& m, int power) {
  const Vector sums = m.rowwise().sum();
  if ((sums.array() - 1.0).abs().maxCoeff() > kProductTolerance) {
    return absl::InternalError(
        absl::StrFormat("P^%d drifted from row-stochastic", power));
  }
  return absl::OkStatus();
}

}  // namespace

void InfluenceTable::SetSupports(
    const std::vector<std::vector<char>>& per_node) {
  std::map<std::vector<char>, int> ids;
  support_id_.clear();
  supports_.clear();
  for (const auto& mask : per_node) {
    auto [it, inserted] = ids.emplace(mask, static_cast<int>(supports_.size()));
    if (inserted) {
      std::vector<int> states;
      for (int x = 0; x < k_; ++x) {
        if (mask[x]) states.push_back(x);
      }
      supports_.push_back(std::move(states));
    }
    support_id_.push_back(it->second);
  }
  forward_.assign(max_extent_ + 1, std::nullopt);
  backward_.assign(max_extent_ + 1, std::nullopt);
}

absl::StatusOr<InfluenceTable> InfluenceTable::ForChain(
    const MarkovChainModel& model, int max_extent) {
  InfluenceTable t;
  t.k_ = model.states();
  t.length_ = model.length();
  t.max_extent_ = std::clamp(max_extent, 0, std::max(0, t.length_ - 1));
  absl::StatusOr<std::vector<Matrix>> powers =
      MatrixPowers(model.transition(), t.max_extent_);
  if (!powers.ok()) return powers.status();
  t.powers_ = *std::move(powers);

  const Matrix& p = model.transition().matrix();
  t.log_marginal_.resize(t.length_, t.k_);
  std::vector<std::vector<char>> masks;
  Eigen::RowVectorXd m = model.initial().transpose();
  for (int i = 0; i < t.length_; ++i) {
    if (i > 0) m = m * p;
    std::vector<char> mask(t.k_);
    for (int x = 0; x < t.k_; ++x) {
      mask[x] = m(x) > 0.0;
      t.log_marginal_(i, x) = m(x) > 0.0 ? std::log(m(x)) : -kInfinity;
    }
    masks.push_back(std::move(mask));
  }
  const Eigen::RowVectorXd q = model.initial().transpose();
  t.stationary_ =
      ((q * p - q).cwiseAbs().maxCoeff() <= kStationaryTolerance);
  t.SetSupports(masks);
  return t;
}

absl::StatusOr<InfluenceTable> InfluenceTable::ForAllInitials(
    const TransitionMatrix& p, int length, int max_extent) {
  InfluenceTable t;
  t.k_ = p.states();
  t.length_ = length;
  t.all_initials_ = true;
  if (length < 1) return absl::InvalidArgumentError("chain length < 1");
  if (static_cast<double>(length) * t.k_ * t.k_ > kMaxAllInitsCells) {
    return absl::ResourceExhaustedError(
        "chain too long for the all-initials table; use the mixing bound");
  }
  t.max_extent_ = std::clamp(max_extent, 0, std::max(0, length - 1));
  const int k = t.k_;
  Matrix power = Matrix::Identity(k, k);
  std::vector<std::vector<char>> masks;
  t.prior_.reserve(length);
  for (int i = 1; i <= length; ++i) {
    // power == P^{i-1}
    if (i - 1 <= t.max_extent_) t.powers_.push_back(power);
    std::vector<char> mask(k);
    for (int x = 0; x < k; ++x) mask[x] = power.col(x).maxCoeff() > 0.0;
    Matrix prior = Matrix::Zero(k, k);
    for (int x = 0; x < k; ++x) {
      for (int xp = 0; xp < k; ++xp) {
        if (x == xp) continue;
        double best = -kInfinity;
        for (int y = 0; y < k; ++y) {
          const double num = power(y, xp);
          const double den = power(y, x);
          if (num <= 0.0 && den <= 0.0) continue;
          best = std::max(best, LogRatio(num, den));
        }
        prior(x, xp) = best;
      }
    }
    t.prior_.push_back(std::move(prior));
    masks.push_back(std::move(mask));
    if (i < length) {
      power = power * p.matrix();
      absl::Status s = CheckRows(power, i);
      if (!s.ok()) return s;
    }
  }
  t.SetSupports(masks);
  return t;
}

const Matrix& InfluenceTable::Forward(int b) {
  std::optional<Matrix>& slot = forward_[b];
  if (!slot) {
    const Matrix& pb = powers_[b];
    Matrix f(k_, k_);
    for (int x = 0; x < k_; ++x) {
      for (int xp = 0; xp < k_; ++xp) {
        double best = -kInfinity;
        for (int z = 0; z < k_; ++z) {
          best = std::max(best, LogRatio(pb(x, z), pb(xp, z)));
        }
        f(x, xp) = best;
      }
    }
    slot = std::move(f);
  }
  return *slot;
}

const Matrix& InfluenceTable::Backward(int a) {
  std::optional<Matrix>& slot = backward_[a];
  if (!slot) {
    const Matrix& pa = powers_[a];
    Matrix g(k_, k_);
    for (int x = 0; x < k_; ++x) {
      for (int xp = 0; xp < k_; ++xp) {
        double best = -kInfinity;
        for (int y = 0; y < k_; ++y) {
          best = std::max(best, LogRatio(pa(y, x), pa(y, xp)));
        }
        g(x, xp) = best;
      }
    }
    slot = std::move(g);
  }
  return *slot;
}

double InfluenceTable::Prior(int node, int x, int xp) const {
  if (all_initials_) return prior_[node - 1](x, xp);
  return log_marginal_(node - 1, xp) - log_marginal_(node - 1, x);
}

double InfluenceTable::Influence(const MarkovQuilt& quilt) {
  if (quilt.shape == QuiltShape::kTrivial) return 0.0;
  const int i = quilt.node;
  const long long key =
      static_cast<long long>(quilt.a) * (length_ + 1) + quilt.b;
  const bool cacheable = stationary_ && quilt.shape == QuiltShape::kPair;
  if (cacheable) {
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
  }
  const Matrix* back = nullptr;
  const Matrix* fwd = nullptr;
  if (quilt.has_left()) back = &Backward(quilt.a);
  if (quilt.has_right()) fwd = &Forward(quilt.b);
  const std::vector<int>& admissible = supports_[support_id_[i - 1]];
  double best = 0.0;
  for (int x : admissible) {
    for (int xp : admissible) {
      if (x == xp) continue;
      double v = 0.0;
      if (back != nullptr) v += Prior(i, x, xp) + (*back)(x, xp);
      if (fwd != nullptr) v += (*fwd)(x, xp);
      if (v > best) best = v;
    }
  }
  if (cacheable) pair_cache_.emplace(key, best);
  return best;
}

double ExactMaxInfluence(const MarkovChainModel& model,
                         const MarkovQuilt& quilt) {
  absl::StatusOr<InfluenceTable> t =
      InfluenceTable::ForChain(model, std::max(quilt.a, quilt.b));
  return t.ok() ? t->Influence(quilt) : kInfinity;
}

double ExactInfluenceAllInits(const TransitionMatrix& p, int length,
                              const MarkovQuilt& quilt) {
  absl::StatusOr<InfluenceTable> t =
      InfluenceTable::ForAllInitials(p, length, std::max(quilt.a, quilt.b));
  return t.ok() ? t->Influence(quilt) : kInfinity;
}

absl::StatusOr<double> BruteForceMaxInfluence(
    const MarkovChainModel& model, int node,
    const std::vector<int>& quilt_nodes) {
  const int k = model.states();
  const int len = model.length();
  if (node < 1 || node > len) return absl::OutOfRangeError("node out of range");
  long total = 1;
  for (int j = 0; j < len; ++j) {
    total *= k;
    if (total > kMaxEnumeration) {
      return absl::ResourceExhaustedError("k^T exceeds 10^6");
    }
  }
  for (int qn : quilt_nodes) {
    if (qn < 1 || qn > len || qn == node) {
      return absl::InvalidArgumentError("invalid quilt node");
    }
  }
  const Matrix& p = model.transition().matrix();
  // joint[x][assignment of quilt nodes]
  std::vector<std::map<std::vector<int>, double>> joint(k);
  std::vector<double> marginal(k, 0.0);
  std::vector<int> seq(len);
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    for (int j = len - 1; j >= 0; --j) {
      seq[j] = static_cast<int>(rest % k);
      rest /= k;
    }
    double pr = model.initial()(seq[0]);
    for (int j = 1; j < len && pr > 0.0; ++j) pr *= p(seq[j - 1], seq[j]);
    if (pr <= 0.0) continue;
    const int x = seq[node - 1];
    std::vector<int> xq;
    for (int qn : quilt_nodes) xq.push_back(seq[qn - 1]);
    joint[x][xq] += pr;
    marginal[x] += pr;
  }
  double best = 0.0;
  for (int x = 0; x < k; ++x) {
    if (marginal[x] <= 0.0) continue;
    for (int xp = 0; xp < k; ++xp) {
      if (xp == x || marginal[xp] <= 0.0) continue;
      for (const auto& [xq, pr] : joint[x]) {
        auto it = joint[xp].find(xq);
        const double den = it == joint[xp].end() ? 0.0 : it->second / marginal[xp];
        best = std::max(best, LogRatio(pr / marginal[x], den));
      }
    }
  }
  return best;
}

absl::StatusOr<double> BruteForceMaxInfluence(const MarkovChainModel& model,
                                              const MarkovQuilt& quilt) {
  return BruteForceMaxInfluence(model, quilt.node, quilt.QuiltNodes());
}

}  // namespace pufferfish
