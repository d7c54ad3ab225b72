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

#ifndef PUFFERFISH_BASELINES_H_
#define PUFFERFISH_BASELINES_H_

#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "pufferfish/noise_plan.h"
#include "pufferfish/query.h"

namespace pufferfish {

// Half-open [start, end) index ranges of independent chains, in order.
struct ChainSegmentation {
  std::vector<std::pair<int, int>> segments;

  static absl::StatusOr<ChainSegmentation> Create(
      std::vector<std::pair<int, int>> segments, int total);
  static ChainSegmentation Single(int length);
  int total() const;
  int longest() const;
  std::vector<int> Lengths() const;
};

// Group DP where each chain is one group: sensitivity of the query when an
// entire longest chain changes, divided by epsilon.
absl::StatusOr<double> GroupDpScale(const LipschitzQuery& query,
                                    const ChainSegmentation& segmentation,
                                    double epsilon);

// Entry-level DP: L / epsilon.
absl::StatusOr<double> EntryDpScale(const LipschitzQuery& query, double epsilon);

absl::StatusOr<NoisePlan> GroupDpPlan(const LipschitzQuery& query,
                                      const ChainSegmentation& segmentation,
                                      double epsilon);
absl::StatusOr<NoisePlan> EntryDpPlan(const LipschitzQuery& query,
                                      double epsilon);

}  // namespace pufferfish

#endif  // PUFFERFISH_BASELINES_H_
