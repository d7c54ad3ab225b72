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

#include "pufferfish/query.h"

#include <algorithm>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/strip.h"

namespace pufferfish {
namespace {

// Parses "prefix(s)" into a 0-based state index.
absl::StatusOr<int> ParseStateArg(std::string_view name,
                                  std::string_view prefix, int states) {
  absl::string_view rest(name.data(), name.size());
  if (!absl::ConsumePrefix(&rest, absl::string_view(prefix.data(), prefix.size())) || !absl::ConsumePrefix(&rest, "(") ||
      !absl::ConsumeSuffix(&rest, ")")) {
    return absl::InvalidArgumentError(absl::StrCat("malformed query ", std::string(name)));
  }
  int s = 0;
  if (!absl::SimpleAtoi(rest, &s) || s < 1 || s > states) {
    return absl::InvalidArgumentError(
        absl::StrCat("state in ", std::string(name), " must be in 1..", states));
  }
  return s - 1;
}

}  // namespace

absl::StatusOr<LipschitzQuery> BuiltinQuery(std::string_view name, int length,
                                            int states) {
  if (length < 1 || states < 1) {
    return absl::InvalidArgumentError("query needs T >= 1 and k >= 1");
  }
  const double t = length;
  LipschitzQuery q;
  q.name = std::string(name);
  if (name == "rel_freq_histogram" || name == "count_histogram") {
    const bool rel = name == "rel_freq_histogram";
    const double unit = rel ? 1.0 / t : 1.0;
    q.lipschitz = 2.0 * unit;
    q.dim = states;
    q.eval = [unit, states](std::span<const int> x) {
      std::vector<double> h(states, 0.0);
      for (int v : x) h[v] += unit;
      return h;
    };
    q.group_sensitivity = [unit](int m) { return 2.0 * m * unit; };
    return q;
  }
  if (name.starts_with("state_frequency") || name.starts_with("state_count")) {
    const bool freq = name.starts_with("state_frequency");
    absl::StatusOr<int> s = ParseStateArg(
        name, freq ? "state_frequency" : "state_count", states);
    if (!s.ok()) return s.status();
    const double unit = freq ? 1.0 / t : 1.0;
    q.lipschitz = unit;
    q.eval = [unit, s = *s](std::span<const int> x) {
      return std::vector<double>{
          unit * static_cast<double>(std::count(x.begin(), x.end(), s))};
    };
    q.group_sensitivity = [unit](int m) { return m * unit; };
    return q;
  }
  if (name == "value_sum") {
    q.lipschitz = states - 1;
    q.eval = [](std::span<const int> x) {
      double sum = 0.0;
      for (int v : x) sum += v;
      return std::vector<double>{sum};
    };
    q.group_sensitivity = [states](int m) {
      return static_cast<double>(m) * (states - 1);
    };
    return q;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown query ", std::string(name)));
}

}  // namespace pufferfish
