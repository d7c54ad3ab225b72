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

#ifndef PUFFERFISH_MIXING_H_
#define PUFFERFISH_MIXING_H_

#include <vector>

#include "absl/status/statusor.h"
#include "pufferfish/distribution_class.h"
#include "pufferfish/markov_chain.h"

namespace pufferfish {

inline constexpr double kReversibleTolerance = 1e-10;

enum class GapMode {
  // 1 - largest sub-unit |eigenvalue| of P P*.
  kPPStar,
  // 2 * (1 - second largest |eigenvalue| of P); reversible chains only.
  kReversible,
};

// True when P^m is strictly positive for some m, i.e. the chain is
// irreducible and aperiodic.
bool IsPrimitive(const TransitionMatrix& p);

// Unique pi with pi P = pi. Fails with "chain does not mix" for reducible or
// periodic chains.
absl::StatusOr<Vector> StationaryDistribution(const TransitionMatrix& p);

// P*(x, y) = pi(y) P(y, x) / pi(x).
absl::StatusOr<TransitionMatrix> TimeReversal(const TransitionMatrix& p,
                                              const Vector& pi);

// Detailed balance pi(x) P(x, y) = pi(y) P(y, x) within kReversibleTolerance.
bool IsReversible(const TransitionMatrix& p, const Vector& pi);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
absl::StatusOr<std::vector<double>> SymmetricEigenvalues(Matrix s);

absl::StatusOr<double> Eigengap(const TransitionMatrix& p, GapMode mode);

struct MixingSummary {
  // Stationary distribution per class member; empty for direct parameters.
  std::vector<Vector> pi;
  double pi_min = 0.0;
  double g = 0.0;
  GapMode mode = GapMode::kPPStar;
  int states = 2;
  int length = 1;
};

// Minimum pi_min and eigengap over the class. Binary intervals use the
// closed forms for two-state chains at the corners and on the grid.
absl::StatusOr<MixingSummary> ComputeMixingSummary(
    const DistributionClass& cls, GapMode mode = GapMode::kPPStar);

}  // namespace pufferfish

#endif  // PUFFERFISH_MIXING_H_
