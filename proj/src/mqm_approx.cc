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

#include "pufferfish/mqm_approx.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "pufferfish/mqm_exact.h"

namespace pufferfish {
namespace {

// Bound terms for t = 0..max_t, evaluated once per plan.
std::vector<double> TermTable(const MixingSummary& s, int max_t) {
  std::vector<double> terms(max_t + 1);
  for (int t = 0; t <= max_t; ++t) terms[t] = BoundTerm(s, t);
  return terms;
}

double TableBound(const std::vector<double>& terms, const MarkovQuilt& q) {
  switch (q.shape) {
    case QuiltShape::kTrivial:
      return 0.0;
    case QuiltShape::kLeft:
      return 2.0 * terms[q.a];
    case QuiltShape::kRight:
      return terms[q.b];
    case QuiltShape::kPair:
      return terms[q.b] + 2.0 * terms[q.a];
  }
  return kInfinity;
}

NoisePlan BasePlan(const char* name, const MixingSummary& summary, int length,
                   const LipschitzQuery& query, double epsilon, int ell) {
  NoisePlan plan;
  plan.mechanism = name;
  plan.epsilon = epsilon;
  plan.lipschitz = query.lipschitz;
  plan.length = length;
  plan.ell = ell;
  plan.a_star = AStar(summary, epsilon);
  return plan;
}

absl::Status CheckSummary(const MixingSummary& s, int length) {
  if (!(s.pi_min > 0.0) || !(s.g > 0.0)) {
    return absl::InvalidArgumentError("mixing summary needs pi_min, g > 0");
  }
  if (length < 1) return absl::InvalidArgumentError("chain length < 1");
  return absl::OkStatus();
}

}  // namespace

double BoundThreshold(const MixingSummary& summary) {
  return 2.0 * std::log(1.0 / summary.pi_min) / summary.g;
}

double BoundTerm(const MixingSummary& summary, int t) {
  if (t < BoundThreshold(summary)) return kInfinity;
  const double decay = std::exp(-summary.g * t / 2.0);
  const double den = summary.pi_min - decay;
  if (!(den > 0.0)) return kInfinity;
  return std::log((summary.pi_min + decay) / den);
}

double InfluenceBound(const MixingSummary& summary, const MarkovQuilt& quilt) {
  const int t = std::max(quilt.a, quilt.b);
  return TableBound(TermTable(summary, t), quilt);
}

int AStar(const MixingSummary& summary, double epsilon) {
  const double e = std::exp(epsilon / 6.0);
  const double inner = std::log(((e + 1.0) / (e - 1.0)) / summary.pi_min);
  return 2 * static_cast<int>(std::ceil(inner / summary.g));
}

absl::StatusOr<NoisePlan> MqmApproxPlan(const MixingSummary& summary,
                                        int length, const LipschitzQuery& query,
                                        double epsilon, int ell) {
  if (absl::Status s = CheckEpsilon(epsilon); !s.ok()) return s;
  if (absl::Status s = CheckSummary(summary, length); !s.ok()) return s;
  if (ell < 1) return absl::InvalidArgumentError("ell must be >= 1");
  NoisePlan plan = BasePlan("mqm_approx", summary, length, query, epsilon, ell);
  const std::vector<double> terms =
      TermTable(summary, std::max(1, std::min(length, ell + 1)));
  auto influence = [&](const MarkovQuilt& q) { return TableBound(terms, q); };
  plan.sigma_max = -kInfinity;
  bool all_trivial = true;
  for (int i = 1; i <= length; ++i) {
    QuiltChoice c = BestQuiltForNode(i, length, ell, epsilon, influence);
    plan.per_node.push_back({i, c.quilt, c.influence, c.score, -1});
    plan.sigma_max = std::max(plan.sigma_max, c.score);
    if (c.quilt.shape != QuiltShape::kTrivial) all_trivial = false;
  }
  if (all_trivial && length > 1) {
    plan.notes.push_back("no quilt meets the mixing-bound threshold; trivial quilt used");
  }
  plan.laplace_scale = plan.lipschitz * plan.sigma_max;
  return plan;
}

absl::StatusOr<NoisePlan> MqmApproxFastPlan(const MixingSummary& summary,
                                            int length,
                                            const LipschitzQuery& query,
                                            double epsilon) {
  if (absl::Status s = CheckEpsilon(epsilon); !s.ok()) return s;
  if (absl::Status s = CheckSummary(summary, length); !s.ok()) return s;
  const int a_star = AStar(summary, epsilon);
  const int ell = 4 * a_star;
  if (static_cast<long>(length) < 8L * a_star) {
    absl::StatusOr<NoisePlan> plan =
        MqmApproxPlan(summary, length, query, epsilon, ell);
    if (!plan.ok()) return plan;
    plan->mechanism = "mqm_approx_fast";
    plan->fallback = true;
    plan->notes.push_back(absl::StrFormat(
        "T = %d < 8 a* = %d; full search with ell = 4 a*", length, 8 * a_star));
    return plan;
  }
  NoisePlan plan =
      BasePlan("mqm_approx_fast", summary, length, query, epsilon, ell);
  const int mid = (length + 1) / 2;
  const std::vector<double> terms = TermTable(summary, ell + 1);
  auto influence = [&](const MarkovQuilt& q) { return TableBound(terms, q); };
  QuiltChoice c = BestQuiltForNode(mid, length, ell, epsilon, influence);
  plan.per_node.push_back({mid, c.quilt, c.influence, c.score, -1});
  plan.sigma_max = c.score;
  plan.laplace_scale = plan.lipschitz * plan.sigma_max;
  plan.notes.push_back(
      absl::StrFormat("middle-node search at X_%d covers every node", mid));
  return plan;
}

absl::StatusOr<NoisePlan> MqmApproxPlanForLengths(
    const MixingSummary& summary, const LipschitzQuery& query, double epsilon,
    int ell, bool fast, const std::vector<int>& lengths) {
  const std::set<int> distinct(lengths.begin(), lengths.end());
  if (distinct.empty()) return absl::InvalidArgumentError("no segments");
  std::optional<NoisePlan> best;
  for (int len : distinct) {
    absl::StatusOr<NoisePlan> plan =
        fast ? MqmApproxFastPlan(summary, len, query, epsilon)
             : MqmApproxPlan(summary, len, query, epsilon, ell);
    if (!plan.ok()) return plan.status();
    if (!best || plan->sigma_max > best->sigma_max) best = *std::move(plan);
  }
  if (distinct.size() > 1) {
    best->notes.push_back(absl::StrFormat(
        "maximum over %d distinct segment lengths; detail is for length %d",
        distinct.size(), best->length));
  }
  return *std::move(best);
}

absl::StatusOr<PrivateRelease> MqmApprox(const DistributionClass& cls,
                                         const LipschitzQuery& query,
                                         std::span<const int> data,
                                         double epsilon, int ell, GapMode mode,
                                         LaplaceSource& src) {
  if (absl::Status s = CheckChainData(cls, data); !s.ok()) return s;
  absl::StatusOr<MixingSummary> s = ComputeMixingSummary(cls, mode);
  if (!s.ok()) return s.status();
  absl::StatusOr<NoisePlan> plan =
      MqmApproxPlan(*s, cls.length(), query, epsilon, ell);
  if (!plan.ok()) return plan.status();
  return Privatize(*plan, query, data, src);
}

absl::StatusOr<PrivateRelease> MqmApproxFast(const DistributionClass& cls,
                                             const LipschitzQuery& query,
                                             std::span<const int> data,
                                             double epsilon, GapMode mode,
                                             LaplaceSource& src) {
  if (absl::Status s = CheckChainData(cls, data); !s.ok()) return s;
  absl::StatusOr<MixingSummary> s = ComputeMixingSummary(cls, mode);
  if (!s.ok()) return s.status();
  absl::StatusOr<NoisePlan> plan =
      MqmApproxFastPlan(*s, cls.length(), query, epsilon);
  if (!plan.ok()) return plan.status();
  return Privatize(*plan, query, data, src);
}

}  // namespace pufferfish
