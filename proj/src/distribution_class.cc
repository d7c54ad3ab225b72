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

#include "pufferfish/distribution_class.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace pufferfish {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

absl::Status CheckLength(int length) {
  if (length < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("chain length %d < 1", length));
  }
  return absl::OkStatus();
}

absl::Status Validate(const FiniteSet& set) {
  if (set.chains.empty()) {
    return absl::InvalidArgumentError("finite set has no chains");
  }
  const int k = set.chains.front().states();
  const int t = set.chains.front().length();
  for (const MarkovChainModel& m : set.chains) {
    if (m.states() != k || m.length() != t) {
      return absl::InvalidArgumentError(
          "all chains in a finite set must share state count and length");
    }
  }
  return absl::OkStatus();
}

absl::Status Validate(const MatrixSetAllInits& set) {
  if (set.matrices.empty()) {
    return absl::InvalidArgumentError("matrix set is empty");
  }
  for (const TransitionMatrix& p : set.matrices) {
    if (p.states() != set.matrices.front().states()) {
      return absl::InvalidArgumentError(
          "all matrices must share the state count");
    }
  }
  return CheckLength(set.length);
}

absl::Status Validate(const BinaryInterval& b) {
  if (!(b.alpha > 0.0 && b.alpha <= b.beta && b.beta < 1.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "binary interval needs 0 < alpha <= beta < 1, got [%g, %g]", b.alpha,
        b.beta));
  }
  if (!(b.grid_step > 0.0)) {
    return absl::InvalidArgumentError("grid_step must be positive");
  }
  return CheckLength(b.length);
}

absl::Status Validate(const MixingParams& m) {
  if (m.states < 2) {
    return absl::InvalidArgumentError("mixing params need k >= 2");
  }
  if (!(m.pi_min > 0.0 && m.pi_min <= 1.0 / m.states + 1e-12)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("pi_min must lie in (0, 1/k], got %g", m.pi_min));
  }
  if (!(m.g > 0.0 && m.g <= 2.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("g must lie in (0, 2], got %g", m.g));
  }
  return CheckLength(m.length);
}

}  // namespace

absl::StatusOr<DistributionClass> DistributionClass::Create(ClassVariant value) {
  absl::Status s =
      std::visit([](const auto& v) { return Validate(v); }, value);
  if (!s.ok()) return s;
  return DistributionClass(std::move(value));
}

int DistributionClass::length() const {
  return std::visit(
      Overloaded{[](const FiniteSet& s) { return s.chains.front().length(); },
                 [](const auto& v) { return v.length; }},
      value_);
}

int DistributionClass::states() const {
  return std::visit(
      Overloaded{
          [](const FiniteSet& s) { return s.chains.front().states(); },
          [](const MatrixSetAllInits& s) {
            return s.matrices.front().states();
          },
          [](const BinaryInterval&) { return 2; },
          [](const MixingParams& m) { return m.states; }},
      value_);
}

DistributionClass DistributionClass::WithLength(int length) const {
  ClassVariant v = value_;
  std::visit(Overloaded{[&](FiniteSet& s) {
                          for (auto& c : s.chains) c = c.WithLength(length);
                        },
                        [&](auto& s) { s.length = length; }},
             v);
  return DistributionClass(std::move(v));
}

std::vector<double> GridPoints(double alpha, double beta, double step) {
  std::vector<double> out;
  const double span = beta - alpha;
  const long n = static_cast<long>(std::floor(span / step + 1e-9));
  for (long j = 0; j <= n; ++j) {
    out.push_back(std::min(beta, alpha + static_cast<double>(j) * step));
  }
  if (beta - out.back() > 1e-12) out.push_back(beta);
  out.back() = beta;
  return out;
}

absl::StatusOr<TransitionMatrix> BinaryTransition(double p0, double p1) {
  Matrix p(2, 2);
  p << p0, 1.0 - p0, 1.0 - p1, p1;
  return TransitionMatrix::Create(std::move(p));
}

absl::StatusOr<MatrixSetAllInits> ExpandGrid(const BinaryInterval& interval) {
  absl::Status s = Validate(interval);
  if (!s.ok()) return s;
  MatrixSetAllInits out;
  out.length = interval.length;
  const std::vector<double> grid =
      GridPoints(interval.alpha, interval.beta, interval.grid_step);
  for (double p0 : grid) {
    for (double p1 : grid) {
      absl::StatusOr<TransitionMatrix> p = BinaryTransition(p0, p1);
      if (!p.ok()) return p.status();
      out.matrices.push_back(*std::move(p));
    }
  }
  return out;
}

absl::Status CheckChainData(const DistributionClass& cls,
                            std::span<const int> data) {
  if (static_cast<int>(data.size()) != cls.length()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "data has %d entries but the class has T = %d", data.size(),
        cls.length()));
  }
  for (size_t j = 0; j < data.size(); ++j) {
    if (data[j] < 0 || data[j] >= cls.states()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("state %d at position %d is outside 1..%d",
                          data[j] + 1, j + 1, cls.states()));
    }
  }
  return absl::OkStatus();
}

}  // namespace pufferfish
