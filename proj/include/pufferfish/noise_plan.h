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

#ifndef PUFFERFISH_NOISE_PLAN_H_
#define PUFFERFISH_NOISE_PLAN_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "pufferfish/laplace.h"
#include "pufferfish/markov_quilt.h"
#include "pufferfish/query.h"

namespace pufferfish {

// Winning quilt at one protected node, maximized over the class.
struct NodeResult {
  int node = 1;
  MarkovQuilt quilt;
  double influence = 0.0;
  double sigma = 0.0;
  // Index of the class member attaining sigma, -1 when not tracked.
  int theta = -1;
};

// Largest per-node score of one class member.
struct ThetaSummary {
  int theta = 0;
  double sigma_max = 0.0;
  int node = 1;
  MarkovQuilt quilt;
  double influence = 0.0;
};

struct NoisePlan {
  std::string mechanism;
  double epsilon = 0.0;
  double lipschitz = 0.0;
  double sigma_max = 0.0;
  // Per-coordinate Laplace scale, lipschitz * sigma_max.
  double laplace_scale = 0.0;
  int length = 0;
  int ell = 0;
  std::vector<NodeResult> per_node;
  std::vector<ThetaSummary> per_theta;
  std::optional<double> wasserstein_w;
  std::optional<int> a_star;
  // Set when a requested fast path fell back to the full search.
  bool fallback = false;
  int skipped_pairs = 0;
  std::vector<std::string> notes;
};

struct PrivateRelease {
  std::vector<double> exact;
  std::vector<double> value;
  NoisePlan plan;
};

// F(data) plus independent Laplace noise of the plan's scale per coordinate.
// A zero scale releases the exact answer.
absl::StatusOr<PrivateRelease> Privatize(const NoisePlan& plan,
                                         const LipschitzQuery& query,
                                         std::span<const int> data,
                                         LaplaceSource& src);

}  // namespace pufferfish

#endif  // PUFFERFISH_NOISE_PLAN_H_
