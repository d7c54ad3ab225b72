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

#include "pufferfish/baselines.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "pufferfish/mqm_exact.h"

namespace pufferfish {

absl::StatusOr<ChainSegmentation> ChainSegmentation::Create(
    std::vector<std::pair<int, int>> segments, int total) {
  if (segments.empty()) return absl::InvalidArgumentError("empty segmentation");
  int expect = 0;
  for (const auto& [start, end] : segments) {
    if (start != expect || end <= start) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "segment [%d, %d) breaks the ordered cover", start, end));
    }
    expect = end;
  }
  if (expect != total) {
    return absl::InvalidArgumentError("segments do not cover the series");
  }
  return ChainSegmentation{std::move(segments)};
}

ChainSegmentation ChainSegmentation::Single(int length) {
  return ChainSegmentation{{{0, length}}};
}

int ChainSegmentation::total() const {
  return segments.empty() ? 0 : segments.back().second;
}

int ChainSegmentation::longest() const {
  int m = 0;
  for (const auto& [s, e] : segments) m = std::max(m, e - s);
  return m;
}

std::vector<int> ChainSegmentation::Lengths() const {
  std::vector<int> out;
  for (const auto& [s, e] : segments) out.push_back(e - s);
  return out;
}

absl::StatusOr<double> GroupDpScale(const LipschitzQuery& query,
                                    const ChainSegmentation& segmentation,
                                    double epsilon) {
  if (absl::Status s = CheckEpsilon(epsilon); !s.ok()) return s;
  if (segmentation.segments.empty()) {
    return absl::InvalidArgumentError("empty segmentation");
  }
  if (!query.group_sensitivity) {
    return absl::InvalidArgumentError(
        "query " + query.name + " has no known group sensitivity");
  }
  return query.group_sensitivity(segmentation.longest()) / epsilon;
}

absl::StatusOr<double> EntryDpScale(const LipschitzQuery& query,
                                    double epsilon) {
  if (absl::Status s = CheckEpsilon(epsilon); !s.ok()) return s;
  return query.lipschitz / epsilon;
}

namespace {

NoisePlan BaselinePlan(const char* name, const LipschitzQuery& query,
                       double epsilon, double scale) {
  NoisePlan plan;
  plan.mechanism = name;
  plan.epsilon = epsilon;
  plan.lipschitz = query.lipschitz;
  plan.laplace_scale = scale;
  plan.sigma_max = query.lipschitz > 0.0 ? scale / query.lipschitz : 0.0;
  return plan;
}

}  // namespace

absl::StatusOr<NoisePlan> GroupDpPlan(const LipschitzQuery& query,
                                      const ChainSegmentation& segmentation,
                                      double epsilon) {
  absl::StatusOr<double> scale = GroupDpScale(query, segmentation, epsilon);
  if (!scale.ok()) return scale.status();
  NoisePlan plan = BaselinePlan("group_dp", query, epsilon, *scale);
  plan.length = segmentation.total();
  return plan;
}

absl::StatusOr<NoisePlan> EntryDpPlan(const LipschitzQuery& query,
                                      double epsilon) {
  absl::StatusOr<double> scale = EntryDpScale(query, epsilon);
  if (!scale.ok()) return scale.status();
  return BaselinePlan("entry_dp", query, epsilon, *scale);
}

}  // namespace pufferfish
