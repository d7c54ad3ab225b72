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

#ifndef PUFFERFISH_MQM_EXACT_H_
#define PUFFERFISH_MQM_EXACT_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "pufferfish/distribution_class.h"
#include "pufferfish/laplace.h"
#include "pufferfish/noise_plan.h"
#include "pufferfish/query.h"

namespace pufferfish {

struct ExactOptions {
  // Worker threads over class members; 0 uses the hardware concurrency.
  int threads = 0;
  // When false only sigma_max is computed: nodes whose best score cannot
  // exceed the running maximum are abandoned early and the plan carries no
  // per-node or per-member detail. The resulting sigma_max is identical.
  bool detail = true;
};

// Markov quilt mechanism with exact max-influence. Accepts finite sets,
// matrix sets with all initial distributions, and binary intervals (expanded
// to their grid). `ell` bounds the quilt extent; ell >= T searches every quilt.
absl::StatusOr<NoisePlan> MqmExactPlan(const DistributionClass& cls,
                                       const LipschitzQuery& query,
                                       double epsilon, int ell,
                                       const ExactOptions& options = {});

// The plan for data made of independent chains of the given lengths: the
// largest sigma_max over the distinct lengths.
absl::StatusOr<NoisePlan> MqmExactPlanForLengths(
    const DistributionClass& cls, const LipschitzQuery& query, double epsilon,
    int ell, const std::vector<int>& lengths, const ExactOptions& options = {});

absl::StatusOr<PrivateRelease> MqmExact(const DistributionClass& cls,
                                        const LipschitzQuery& query,
                                        std::span<const int> data,
                                        double epsilon, int ell,
                                        LaplaceSource& src,
                                        const ExactOptions& options = {});

// Shared argument checks for the quilt mechanisms.
absl::Status CheckEpsilon(double epsilon);

}  // namespace pufferfish

#endif  // PUFFERFISH_MQM_EXACT_H_
