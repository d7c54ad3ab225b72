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

#ifndef PUFFERFISH_QUERY_H_
#define PUFFERFISH_QUERY_H_

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace pufferfish {

// A query over a state sequence (0-based states) with a known L1 Lipschitz
// constant for a single-record change.
struct LipschitzQuery {
  std::string name;
  double lipschitz = 0.0;
  int dim = 1;
  std::function<std::vector<double>(std::span<const int>)> eval;
  // L1 sensitivity when a block of `m` consecutive records changes
  // arbitrarily. Empty for user-defined queries without a known value.
  std::function<double(int m)> group_sensitivity;
};

// Recognized names, with 1-based state `s`:
//   rel_freq_histogram     L = 2/T, dim k
//   count_histogram        L = 2,   dim k
//   state_frequency(s)     L = 1/T, dim 1
//   state_count(s)         L = 1,   dim 1
//   value_sum              L = k-1, dim 1 (sum of 0-based state values)
absl::StatusOr<LipschitzQuery> BuiltinQuery(std::string_view name, int length,
                                            int states);

}  // namespace pufferfish

#endif  // PUFFERFISH_QUERY_H_
