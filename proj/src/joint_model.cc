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

#include "pufferfish/joint_model.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "pufferfish/w_infinity.h"

namespace pufferfish {
namespace {

absl::StatusOr<long> OutcomeCount(int n, int domain) {
  if (n < 1 || domain < 1) {
    return absl::InvalidArgumentError("need n >= 1 and domain >= 1");
  }
  long count = 1;
  for (int r = 0; r < n; ++r) {
    count *= domain;
    if (count > kMaxJointOutcomes) {
      return absl::ResourceExhaustedError(absl::StrFormat(
          "domain^n exceeds the enumeration limit of %d", kMaxJointOutcomes));
    }
  }
  return count;
}

double ScalarValue(const LipschitzQuery& query, std::span<const int> x) {
  return query.eval(x).at(0);
}

}  // namespace

absl::StatusOr<JointModel> JointModel::Create(int n, int domain,
                                              std::vector<double> probs) {
  absl::StatusOr<long> count = OutcomeCount(n, domain);
  if (!count.ok()) return count.status();
  if (static_cast<long>(probs.size()) != *count) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "joint table has %d entries, expected %d", probs.size(), *count));
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || p > 1.0) {
      return absl::InvalidArgumentError("joint entries must lie in [0,1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("joint table sums to %.15g", total));
  }
  return JointModel(n, domain, std::move(probs));
}

std::vector<int> JointModel::Outcome(long index) const {
  std::vector<int> x(n_);
  for (int r = n_ - 1; r >= 0; --r) {
    x[r] = static_cast<int>(index % domain_);
    index /= domain_;
  }
  return x;
}

double JointModel::Marginal(int record, int value) const {
  double m = 0.0;
  for (long idx = 0; idx < outcomes(); ++idx) {
    if (Outcome(idx)[record] == value) m += probs_[idx];
  }
  return m;
}

absl::StatusOr<GroupStructure> GroupStructure::Create(
    std::vector<std::vector<int>> groups, int n) {
  std::vector<int> seen(n, 0);
  for (const auto& g : groups) {
    if (g.empty()) return absl::InvalidArgumentError("empty group");
    for (int r : g) {
      if (r < 0 || r >= n) {
        return absl::OutOfRangeError(absl::StrFormat("record %d", r));
      }
      if (seen[r]++) {
        return absl::InvalidArgumentError(
            absl::StrFormat("record %d in two groups", r));
      }
    }
  }
  for (int r = 0; r < n; ++r) {
    if (!seen[r]) {
      return absl::InvalidArgumentError(
          absl::StrFormat("record %d not covered", r));
    }
  }
  return GroupStructure{std::move(groups)};
}

GroupStructure GroupStructure::Singletons(int n) {
  GroupStructure g;
  for (int r = 0; r < n; ++r) g.groups.push_back({r});
  return g;
}

absl::StatusOr<DiscreteDistribution> ConditionalOutputDist(
    const JointModel& model, const LipschitzQuery& query, int record,
    int value) {
  if (record < 0 || record >= model.n() || value < 0 ||
      value >= model.domain()) {
    return absl::OutOfRangeError("secret outside the model");
  }
  std::map<double, double> mass;
  double total = 0.0;
  for (long idx = 0; idx < model.outcomes(); ++idx) {
    const double p = model.probs()[idx];
    if (p <= 0.0) continue;
    const std::vector<int> x = model.Outcome(idx);
    if (x[record] != value) continue;
    mass[ScalarValue(query, x)] += p;
    total += p;
  }
  if (!(total > 0.0)) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "secret X_%d = %d has zero probability", record + 1, value));
  }
  std::vector<Atom> atoms;
  for (const auto& [v, p] : mass) atoms.push_back({v, p / total});
  return DiscreteDistribution::Create(std::move(atoms));
}

absl::StatusOr<WassersteinScaleResult> WassersteinScale(
    const std::vector<JointModel>& models, const LipschitzQuery& query) {
  WassersteinScaleResult out;
  for (const JointModel& m : models) {
    for (int r = 0; r < m.n(); ++r) {
      std::vector<std::optional<DiscreteDistribution>> cond(m.domain());
      for (int v = 0; v < m.domain(); ++v) {
        absl::StatusOr<DiscreteDistribution> d =
            ConditionalOutputDist(m, query, r, v);
        if (d.ok()) {
          cond[v] = *std::move(d);
        } else if (!absl::IsFailedPrecondition(d.status())) {
          return d.status();
        }
      }
      for (int v = 0; v < m.domain(); ++v) {
        for (int u = v + 1; u < m.domain(); ++u) {
          if (!cond[v] || !cond[u]) {
            ++out.skipped_pairs;
            continue;
          }
          ++out.evaluated_pairs;
          out.w = std::max(out.w, WInfinity(*cond[v], *cond[u]));
        }
      }
    }
  }
  if (out.evaluated_pairs == 0) {
    return absl::FailedPreconditionError("no secret pair has both sides defined");
  }
  return out;
}

absl::StatusOr<NoisePlan> WassersteinPlan(const std::vector<JointModel>& models,
                                          const LipschitzQuery& query,
                                          double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError("epsilon must be positive and finite");
  }
  if (query.dim != 1) {
    return absl::InvalidArgumentError(
        "the Wasserstein mechanism takes a scalar query");
  }
  absl::StatusOr<WassersteinScaleResult> w = WassersteinScale(models, query);
  if (!w.ok()) return w.status();
  NoisePlan plan;
  plan.mechanism = "wasserstein";
  plan.epsilon = epsilon;
  plan.lipschitz = 1.0;
  plan.sigma_max = w->w / epsilon;
  plan.laplace_scale = plan.sigma_max;
  plan.wasserstein_w = w->w;
  plan.skipped_pairs = w->skipped_pairs;
  plan.length = models.empty() ? 0 : models.front().n();
  if (w->skipped_pairs > 0) {
    plan.notes.push_back(absl::StrFormat(
        "skipped %d secret pairs with an undefined conditional",
        w->skipped_pairs));
  }
  return plan;
}

absl::StatusOr<PrivateRelease> WassersteinMechanism(
    const std::vector<JointModel>& models, const LipschitzQuery& query,
    std::span<const int> data, double epsilon, LaplaceSource& src) {
  absl::StatusOr<NoisePlan> plan = WassersteinPlan(models, query, epsilon);
  if (!plan.ok()) return plan.status();
  return Privatize(*plan, query, data, src);
}

absl::StatusOr<double> GroupSensitivity(int n, int domain,
                                        const LipschitzQuery& query,
                                        const GroupStructure& groups) {
  absl::StatusOr<long> count = OutcomeCount(n, domain);
  if (!count.ok()) return count.status();
  std::vector<double> f(*count);
  std::vector<int> x(n);
  for (long idx = 0; idx < *count; ++idx) {
    long rest = idx;
    for (int r = n - 1; r >= 0; --r) {
      x[r] = static_cast<int>(rest % domain);
      rest /= domain;
    }
    f[idx] = ScalarValue(query, x);
  }
  std::vector<long> weight(n);
  long w = 1;
  for (int r = n - 1; r >= 0; --r) {
    weight[r] = w;
    w *= domain;
  }
  double best = 0.0;
  for (const auto& g : groups.groups) {
    long mask_count = 1;
    for (size_t j = 0; j < g.size(); ++j) mask_count *= domain;
    // Within one group, outcomes sharing the values outside the group form a
    // block; the sensitivity is the largest spread of F inside a block.
    for (long idx = 0; idx < *count; ++idx) {
      long base = idx;
      bool is_base = true;
      for (int r : g) {
        if ((idx / weight[r]) % domain != 0) is_base = false;
      }
      if (!is_base) continue;
      double lo = kInfinity, hi = -kInfinity;
      for (long m = 0; m < mask_count; ++m) {
        long o = base, rest = m;
        for (int r : g) {
          o += (rest % domain) * weight[r];
          rest /= domain;
        }
        lo = std::min(lo, f[o]);
        hi = std::max(hi, f[o]);
      }
      best = std::max(best, hi - lo);
    }
  }
  return best;
}

}  // namespace pufferfish
