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

#include "pufferfish/laplace.h"

#include <cmath>

#include "absl/status/status.h"

namespace pufferfish {
namespace {

constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

}  // namespace

uint64_t Mix64(uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

uint64_t LaplaceSource::NextBits() { return Mix64(seed_ + (++counter_) * kGamma); }

double LaplaceSource::NextUniform() {
  return (static_cast<double>(NextBits() >> 11) + 0.5) * 0x1.0p-53;
}

double LaplaceSource::NextLaplace(double scale) {
  const double v = NextUniform() - 0.5;
  return -scale * std::copysign(1.0, v) * std::log1p(-2.0 * std::abs(v));
}

absl::StatusOr<std::vector<double>> LaplaceSource::Sample(double scale, int n) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError("Laplace scale must be positive and finite");
  }
  if (n < 0) return absl::InvalidArgumentError("negative sample count");
  std::vector<double> out(n);
  for (double& x : out) x = NextLaplace(scale);
  return out;
}

LaplaceSource LaplaceSource::Derive(uint64_t stream) const {
  return LaplaceSource(Mix64(seed_ ^ Mix64(stream + kGamma)));
}

}  // namespace pufferfish
