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

#ifndef PUFFERFISH_BENCH_H_
#define PUFFERFISH_BENCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace pufferfish {

// Synthetic binary-chain sweep over classes [alpha, 1 - alpha].
struct BenchConfig {
  std::vector<double> alphas = {0.1, 0.2, 0.3, 0.4};
  std::vector<double> epsilons = {0.2, 1.0, 5.0};
  std::vector<std::string> mechanisms = {"mqm_exact", "mqm_approx",
                                         "group_dp"};
  int trials = 500;
  int length = 100;
  double grid_step = 0.01;
  uint64_t seed = 0;
  int threads = 0;
};

struct BenchCell {
  double alpha = 0.0;
  double epsilon = 0.0;
  std::string mechanism;
  double laplace_scale = 0.0;
  double mean_error = 0.0;
  std::vector<double> errors;
};

// For every (alpha, epsilon, mechanism) the Laplace scale is computed once;
// each trial draws p0, p1 uniformly from [alpha, 1 - alpha] and q uniformly
// from the simplex, samples a chain, and privatizes the frequency of the
// second state. Trial t uses the stream Derive(t) of the base seed in every
// cell, so cells share their random numbers.
absl::StatusOr<std::vector<BenchCell>> RunBench(const BenchConfig& config);

}  // namespace pufferfish

#endif  // PUFFERFISH_BENCH_H_
