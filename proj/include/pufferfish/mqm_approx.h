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

#ifndef PUFFERFISH_MQM_APPROX_H_
#define PUFFERFISH_MQM_APPROX_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "pufferfish/distribution_class.h"
#include "pufferfish/laplace.h"
#include "pufferfish/markov_quilt.h"
#include "pufferfish/mixing.h"
#include "pufferfish/noise_plan.h"
#include "pufferfish/query.h"

namespace pufferfish {

// Smallest extent for which the mixing bound applies: 2 log(1/pi_min) / g.
double BoundThreshold(const MixingSummary& summary);

// log((pi_min + e^{-g t/2}) / (pi_min - e^{-g t/2})), or infinity when t is
// below the threshold.
double BoundTerm(const MixingSummary& summary, int t);

// Upper bound on the max-influence from mixing parameters alone:
// Pair(a, b) -> term(b) + 2 term(a), Left(a) -> 2 term(a),
// Right(b) -> term(b), Trivial -> 0.
double InfluenceBound(const MixingSummary& summary, const MarkovQuilt& quilt);

// 2 * ceil(log(((e^{eps/6} + 1) / (e^{eps/6} - 1)) / pi_min) / g).
int AStar(const MixingSummary& summary, double epsilon);

// Markov quilt mechanism with the mixing bound in place of exact influence.
// Falls back to the trivial quilt wherever nothing else is usable.
absl::StatusOr<NoisePlan> MqmApproxPlan(const MixingSummary& summary,
                                        int length, const LipschitzQuery& query,
                                        double epsilon, int ell);

// Searches only pair quilts around the middle node with a + b < 4 a*. Valid
// when T >= 8 a*; shorter chains use MqmApproxPlan with ell = 4 a* and set
// `fallback`.
absl::StatusOr<NoisePlan> MqmApproxFastPlan(const MixingSummary& summary,
                                            int length,
                                            const LipschitzQuery& query,
                                            double epsilon);

absl::StatusOr<NoisePlan> MqmApproxPlanForLengths(
    const MixingSummary& summary, const LipschitzQuery& query, double epsilon,
    int ell, bool fast, const std::vector<int>& lengths);

absl::StatusOr<PrivateRelease> MqmApprox(const DistributionClass& cls,
                                         const LipschitzQuery& query,
                                         std::span<const int> data,
                                         double epsilon, int ell, GapMode mode,
                                         LaplaceSource& src);

absl::StatusOr<PrivateRelease> MqmApproxFast(const DistributionClass& cls,
                                             const LipschitzQuery& query,
                                             std::span<const int> data,
                                             double epsilon, GapMode mode,
                                             LaplaceSource& src);

}  // namespace pufferfish

#endif  // PUFFERFISH_MQM_APPROX_H_
