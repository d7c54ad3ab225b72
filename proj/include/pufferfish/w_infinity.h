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

#ifndef PUFFERFISH_W_INFINITY_H_
#define PUFFERFISH_W_INFINITY_H_

#include "absl/status/statusor.h"
#include "pufferfish/discrete_distribution.h"

namespace pufferfish {

// Mass below this is treated as an empty coupling segment.
inline constexpr double kSegmentTolerance = 1e-12;

// Infinity-Wasserstein distance on the line via the monotone coupling.
double WInfinity(const DiscreteDistribution& mu, const DiscreteDistribution& nu);

// Independent check by thresholding: the smallest pairwise distance w for
// which a max-flow transport using only pairs within w carries all the mass.
// Combined support must not exceed 16 atoms.
absl::StatusOr<double> WInfinityOracle(const DiscreteDistribution& mu,
                                       const DiscreteDistribution& nu);

}  // namespace pufferfish

#endif  // PUFFERFISH_W_INFINITY_H_
