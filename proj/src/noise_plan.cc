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

#include "pufferfish/noise_plan.h"

#include <cmath>

#include "absl/status/status.h"

namespace pufferfish {

absl::StatusOr<PrivateRelease> Privatize(const NoisePlan& plan,
                                         const LipschitzQuery& query,
                                         std::span<const int> data,
                                         LaplaceSource& src) {
  if (!std::isfinite(plan.laplace_scale) || plan.laplace_scale < 0.0) {
    return absl::InvalidArgumentError("noise plan has no finite scale");
  }
  PrivateRelease out;
  out.exact = query.eval(data);
  out.value = out.exact;
  out.plan = plan;
  if (plan.laplace_scale > 0.0) {
    absl::StatusOr<std::vector<double>> noise =
        src.Sample(plan.laplace_scale, static_cast<int>(out.value.size()));
    if (!noise.ok()) return noise.status();
    for (size_t j = 0; j < out.value.size(); ++j) out.value[j] += (*noise)[j];
  }
  return out;
}

}  // namespace pufferfish
