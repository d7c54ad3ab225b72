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

#ifndef PUFFERFISH_LAPLACE_H_
#define PUFFERFISH_LAPLACE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"

namespace pufferfish {

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// Counter-based generator: output j is Mix64(seed + j * golden_gamma), so a
// stream is a pure function of its seed on every platform.
class LaplaceSource {
 public:
  explicit LaplaceSource(uint64_t seed) : seed_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t NextBits();
  // Uniform on the open interval (0, 1).
  double NextUniform();
  // One zero-mean Laplace draw of the given scale, by inverse CDF.
  double NextLaplace(double scale);

  absl::StatusOr<std::vector<double>> Sample(double scale, int n);

  // An independent source for parallel or per-trial use.
  LaplaceSource Derive(uint64_t stream) const;

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace pufferfish

#endif  // PUFFERFISH_LAPLACE_H_
