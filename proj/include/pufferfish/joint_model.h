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

#ifndef PUFFERFISH_JOINT_MODEL_H_
#define PUFFERFISH_JOINT_MODEL_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "pufferfish/discrete_distribution.h"
#include "pufferfish/laplace.h"
#include "pufferfish/noise_plan.h"
#include "pufferfish/query.h"

namespace pufferfish {

inline constexpr long kMaxJointOutcomes = 10'000'000;

// An explicit joint distribution over n records with values 0..domain-1.
// Outcomes are indexed row-major with record 0 as the most significant digit.
class JointModel {
 public:
  static absl::StatusOr<JointModel> Create(int n, int domain,
                                           std::vector<double> probs);

  int n() const { return n_; }
  int domain() const { return domain_; }
  const std::vector<double>& probs() const { return probs_; }
  long outcomes() const { return static_cast<long>(probs_.size()); }
  // Record values of outcome `index`.
  std::vector<int> Outcome(long index) const;
  // P(X_record = value).
  double Marginal(int record, int value) const;

 private:
  JointModel(int n, int domain, std::vector<double> probs)
      : n_(n), domain_(domain), probs_(std::move(probs)) {}

  int n_;
  int domain_;
  std::vector<double> probs_;
};

// A partition of the 0-based records into groups.
struct GroupStructure {
  std::vector<std::vector<int>> groups;

  static absl::StatusOr<GroupStructure> Create(
      std::vector<std::vector<int>> groups, int n);
  static GroupStructure Singletons(int n);
};

// Exact distribution of the scalar query F(X) given X_record = value.
absl::StatusOr<DiscreteDistribution> ConditionalOutputDist(
    const JointModel& model, const LipschitzQuery& query, int record, int value);

struct WassersteinScaleResult {
  double w = 0.0;
  int evaluated_pairs = 0;
  // Secret pairs dropped because one side has zero probability.
  int skipped_pairs = 0;
};

// Largest infinity-Wasserstein distance between the output distributions of
// two values of the same record, over every record, value pair and model.
absl::StatusOr<WassersteinScaleResult> WassersteinScale(
    const std::vector<JointModel>& models, const LipschitzQuery& query);

absl::StatusOr<NoisePlan> WassersteinPlan(const std::vector<JointModel>& models,
                                          const LipschitzQuery& query,
                                          double epsilon);

// F(data) + Lap(W / epsilon).
absl::StatusOr<PrivateRelease> WassersteinMechanism(
    const std::vector<JointModel>& models, const LipschitzQuery& query,
    std::span<const int> data, double epsilon, LaplaceSource& src);

// Largest |F(x) - F(x')| over pairs differing only inside one group.
absl::StatusOr<double> GroupSensitivity(int n, int domain,
                                        const LipschitzQuery& query,
                                        const GroupStructure& groups);

}  // namespace pufferfish

#endif  // PUFFERFISH_JOINT_MODEL_H_
