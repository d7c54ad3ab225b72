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

#include "pufferfish/markov_quilt.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace pufferfish {

bool MarkovQuilt::IsValid() const {
  if (node < 1 || node > length) return false;
  switch (shape) {
    case QuiltShape::kTrivial:
      return a == 0 && b == 0;
    case QuiltShape::kLeft:
      return b == 0 && a >= 1 && node - a >= 1;
    case QuiltShape::kRight:
      return a == 0 && b >= 1 && node + b <= length;
    case QuiltShape::kPair:
      return a >= 1 && b >= 1 && node - a >= 1 && node + b <= length;
  }
  return false;
}

int MarkovQuilt::NearbySize() const {
  switch (shape) {
    case QuiltShape::kTrivial:
      return length;
    case QuiltShape::kLeft:
      return length - node + a;
    case QuiltShape::kRight:
      return node + b - 1;
    case QuiltShape::kPair:
      return a + b - 1;
  }
  return length;
}

std::vector<int> MarkovQuilt::QuiltNodes() const {
  std::vector<int> out;
  if (has_left()) out.push_back(node - a);
  if (has_right()) out.push_back(node + b);
  return out;
}

std::string MarkovQuilt::ToString() const {
  return absl::StrCat(
      "{",
      absl::StrJoin(QuiltNodes(), ",",
                    [](std::string* out, int v) { absl::StrAppend(out, "X_", v); }),
      "}");
}

std::vector<MarkovQuilt> MinimalQuiltSet(int node, int length, int ell) {
  const int i = node;
  const int t = length;
  std::vector<MarkovQuilt> out;
  out.push_back(MarkovQuilt::Trivial(i, t));
  for (int a = 1; a <= i - 1; ++a) {
    for (int b = 1; b <= t - i && a + b < ell; ++b) {
      out.push_back(MarkovQuilt::Pair(i, t, a, b));
    }
    if (t - i + a <= ell) out.push_back(MarkovQuilt::Left(i, t, a));
  }
  for (int b = 1; b <= t - i; ++b) {
    if (i + b - 1 <= ell) out.push_back(MarkovQuilt::Right(i, t, b));
  }
  std::sort(out.begin(), out.end(), TieBreakLess);
  return out;
}

double Score(const MarkovQuilt& quilt, double influence, double epsilon) {
  if (!(influence < epsilon)) return kInfinity;
  return quilt.NearbySize() / (epsilon - influence);
}

}  // namespace pufferfish
