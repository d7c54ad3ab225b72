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

#include "pufferfish/planner.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pufferfish/baselines.h"
#include "pufferfish/mqm_approx.h"
#include "pufferfish/mqm_exact.h"

namespace pufferfish {

absl::StatusOr<GapMode> ParseGapMode(const std::string& name) {
  if (name == "pp_star") return GapMode::kPPStar;
  if (name == "reversible") return GapMode::kReversible;
  return absl::InvalidArgumentError("gap mode must be pp_star or reversible");
}

absl::StatusOr<PlanOutcome> PlanForClass(const DistributionClass& cls,
                                         const LipschitzQuery& query,
                                         const PlanRequest& request) {
  if (absl::Status s = CheckEpsilon(request.epsilon); !s.ok()) return s;
  std::vector<int> lengths = request.lengths;
  if (lengths.empty()) lengths.push_back(cls.length());
  if (*std::min_element(lengths.begin(), lengths.end()) < 1) {
    return absl::InvalidArgumentError("chain lengths must be positive");
  }
  const int longest = *std::max_element(lengths.begin(), lengths.end());
  const int ell = request.ell > 0 ? std::min(request.ell, longest) : longest;
  const std::string& m = request.mechanism;

  PlanOutcome out;
  absl::StatusOr<NoisePlan> plan;
  if (m == "mqm_exact") {
    plan = MqmExactPlanForLengths(cls, query, request.epsilon, ell, lengths,
                                  ExactOptions{request.threads, true});
  } else if (m == "mqm_approx" || m == "mqm_approx_fast") {
    absl::StatusOr<MixingSummary> s = ComputeMixingSummary(cls, request.gap_mode);
    if (!s.ok()) return s.status();
    out.summary = *s;
    plan = MqmApproxPlanForLengths(*s, query, request.epsilon, ell,
                                   m == "mqm_approx_fast", lengths);
  } else if (m == "group_dp" || m == "entry_dp") {
    std::vector<std::pair<int, int>> segments;
    int start = 0;
    for (int len : lengths) {
      segments.emplace_back(start, start + len);
      start += len;
    }
    plan = m == "group_dp"
               ? GroupDpPlan(query, ChainSegmentation{segments}, request.epsilon)
               : EntryDpPlan(query, request.epsilon);
  } else {
    return absl::InvalidArgumentError(absl::StrCat("unknown mechanism ", m));
  }
  if (!plan.ok()) return plan.status();
  out.plan = *std::move(plan);
  return out;
}

}  // namespace pufferfish
