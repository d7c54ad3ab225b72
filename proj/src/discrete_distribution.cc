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

#include "pufferfish/discrete_distribution.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace pufferfish {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::vector<Atom> CanonicalAtoms(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  std::vector<Atom> out;
  for (const Atom& a : atoms) {
    if (!out.empty() && a.value - out.back().value <= kAtomMergeTolerance) {
      out.back().prob += a.prob;
    } else {
      out.push_back(a);
    }
  }
  std::erase_if(out, [](const Atom& a) { return a.prob <= 0.0; });
  return out;
}

absl::StatusOr<DiscreteDistribution> DiscreteDistribution::Create(
    std::vector<Atom> atoms) {
  double total = 0.0;
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.value) || !std::isfinite(a.prob) || a.prob < 0.0 ||
        a.prob > 1.0 + kMassTolerance) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "invalid atom (%g, %g)", a.value, a.prob));
    }
    total += a.prob;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("probabilities sum to %.15g", total));
  }
  return DiscreteDistribution(CanonicalAtoms(std::move(atoms)));
}

absl::StatusOr<DiscreteDistribution> DiscreteDistribution::OnIntegers(
    const std::vector<double>& probs) {
  std::vector<double> values(probs.size());
  for (size_t i = 0; i < values.size(); ++i) values[i] = static_cast<double>(i);
  return FromValues(values, probs);
}

absl::StatusOr<DiscreteDistribution> DiscreteDistribution::FromValues(
    const std::vector<double>& values, const std::vector<double>& probs) {
  if (values.size() != probs.size()) {
    return absl::InvalidArgumentError("values and probs differ in length");
  }
  std::vector<Atom> atoms;
  for (size_t i = 0; i < values.size(); ++i) atoms.push_back({values[i], probs[i]});
  return Create(std::move(atoms));
}

double DiscreteDistribution::ProbAt(double value) const {
  auto it = std::lower_bound(
      atoms_.begin(), atoms_.end(), value - kAtomMergeTolerance,
      [](const Atom& a, double v) { return a.value < v; });
  if (it != atoms_.end() && std::abs(it->value - value) <= kAtomMergeTolerance) {
    return it->prob;
  }
  return 0.0;
}

bool operator==(const DiscreteDistribution& a, const DiscreteDistribution& b) {
  if (a.atoms_.size() != b.atoms_.size()) return false;
  for (size_t i = 0; i < a.atoms_.size(); ++i) {
    if (std::abs(a.atoms_[i].value - b.atoms_[i].value) > kAtomMergeTolerance ||
        std::abs(a.atoms_[i].prob - b.atoms_[i].prob) > kMassTolerance) {
      return false;
    }
  }
  return true;
}

double MaxDivergence(const DiscreteDistribution& p,
                     const DiscreteDistribution& q) {
  double best = -kInf;
  for (const Atom& a : p.atoms()) {
    const double qa = q.ProbAt(a.value);
    if (qa <= 0.0) return kInf;
    best = std::max(best, std::log(a.prob / qa));
  }
  return std::max(best, 0.0);
}

double SymmetricMaxDivergence(const DiscreteDistribution& p,
                              const DiscreteDistribution& q) {
  return std::max(MaxDivergence(p, q), MaxDivergence(q, p));
}

absl::StatusOr<DiscreteDistribution> ConditionRenormalize(
    const DiscreteDistribution& p, const std::vector<int>& keep) {
  std::vector<Atom> kept;
  double mass = 0.0;
  for (int idx : keep) {
    if (idx < 0 || idx >= p.size()) {
      return absl::OutOfRangeError(absl::StrFormat("atom index %d", idx));
    }
    kept.push_back(p.atoms()[idx]);
    mass += p.atoms()[idx].prob;
  }
  if (!(mass > 0.0)) {
    return absl::InvalidArgumentError("kept atoms carry no mass");
  }
  for (Atom& a : kept) a.prob /= mass;
  return DiscreteDistribution::Create(std::move(kept));
}

absl::StatusOr<RobustnessResult> RobustnessDelta(
    const std::vector<DiscreteDistribution>& believed,
    const std::vector<std::vector<DiscreteDistribution>>& candidates,
    double epsilon) {
  if (candidates.empty()) {
    return absl::InvalidArgumentError("no candidate distributions");
  }
  double delta = kInf;
  for (const auto& cand : candidates) {
    if (cand.size() != believed.size()) {
      return absl::InvalidArgumentError(
          "candidate and belief index different secret sets");
    }
    double worst = 0.0;
    for (size_t s = 0; s < believed.size(); ++s) {
      worst = std::max(worst, SymmetricMaxDivergence(believed[s], cand[s]));
    }
    delta = std::min(delta, worst);
  }
  return RobustnessResult{delta, epsilon + 2.0 * delta};
}

}  // namespace pufferfish
