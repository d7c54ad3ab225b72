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

#ifndef PUFFERFISH_DISCRETE_DISTRIBUTION_H_
#define PUFFERFISH_DISCRETE_DISTRIBUTION_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace pufferfish {

inline constexpr double kAtomMergeTolerance = 1e-12;
inline constexpr double kMassTolerance = 1e-10;

struct Atom {
  double value = 0.0;
  double prob = 0.0;
};

// A finite distribution on the real line in canonical form: atoms sorted by
// value, values within kAtomMergeTolerance merged, zero-mass atoms dropped.
class DiscreteDistribution {
 public:
  static absl::StatusOr<DiscreteDistribution> Create(std::vector<Atom> atoms);
  // Probabilities on the points 0, 1, ..., n-1.
  static absl::StatusOr<DiscreteDistribution> OnIntegers(
      const std::vector<double>& probs);
  static absl::StatusOr<DiscreteDistribution> FromValues(
      const std::vector<double>& values, const std::vector<double>& probs);

  const std::vector<Atom>& atoms() const { return atoms_; }
  int size() const { return static_cast<int>(atoms_.size()); }
  // Probability of the atom at `value`, 0 if absent.
  double ProbAt(double value) const;

  friend bool operator==(const DiscreteDistribution& a,
                         const DiscreteDistribution& b);

 private:
  explicit DiscreteDistribution(std::vector<Atom> atoms)
      : atoms_(std::move(atoms)) {}

  std::vector<Atom> atoms_;
};

// Merges atoms and normalizes small drift, without the sum-to-one check.
std::vector<Atom> CanonicalAtoms(std::vector<Atom> atoms);

// D_inf(p || q) = max over the support of p of log p(x)/q(x).
double MaxDivergence(const DiscreteDistribution& p,
                     const DiscreteDistribution& q);
double SymmetricMaxDivergence(const DiscreteDistribution& p,
                              const DiscreteDistribution& q);

// Keeps the atoms at the given 0-based positions and renormalizes.
absl::StatusOr<DiscreteDistribution> ConditionRenormalize(
    const DiscreteDistribution& p, const std::vector<int>& keep);

struct RobustnessResult {
  double delta = 0.0;
  double epsilon = 0.0;
};

// Robustness of a guarantee to a misspecified belief. `believed[s]` is the
// conditional for secret s under the adversary's belief and
// `candidates[j][s]` the same conditional under candidate j. Delta is the
// smallest over candidates of the largest symmetric max-divergence over
// secrets; the inflated privacy level is epsilon + 2 * Delta.
absl::StatusOr<RobustnessResult> RobustnessDelta(
    const std::vector<DiscreteDistribution>& believed,
    const std::vector<std::vector<DiscreteDistribution>>& candidates,
    double epsilon);

}  // namespace pufferfish

#endif  // PUFFERFISH_DISCRETE_DISTRIBUTION_H_
