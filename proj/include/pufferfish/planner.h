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

#ifndef PUFFERFISH_PLANNER_H_
#define PUFFERFISH_PLANNER_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "pufferfish/distribution_class.h"
#include "pufferfish/mixing.h"
#include "pufferfish/noise_plan.h"
#include "pufferfish/query.h"

namespace pufferfish {

struct PlanRequest {
  // mqm_exact, mqm_approx, mqm_approx_fast, group_dp or entry_dp.
  std::string mechanism = "mqm_exact";
  double epsilon = 1.0;
  // 0 means the longest chain.
  int ell = 0;
  GapMode gap_mode = GapMode::kPPStar;
  // Lengths of the independent chains in the data; empty means one chain of
  // the class length.
  std::vector<int> lengths;
  int threads = 0;
};

struct PlanOutcome {
  NoisePlan plan;
  std::optional<MixingSummary> summary;
};

absl::StatusOr<PlanOutcome> PlanForClass(const DistributionClass& cls,
                                         const LipschitzQuery& query,
                                         const PlanRequest& request);

absl::StatusOr<GapMode> ParseGapMode(const std::string& name);

}  // namespace pufferfish

#endif  // PUFFERFISH_PLANNER_H_
