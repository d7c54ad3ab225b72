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

#ifndef PUFFERFISH_MARKOV_QUILT_H_
#define PUFFERFISH_MARKOV_QUILT_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

namespace pufferfish {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class QuiltShape { kTrivial, kLeft, kRight, kPair };

// A quilt around the protected node X_i of a chain X_1..X_T (1-based).
//   Pair(a, b):  X_Q = {X_{i-a}, X_{i+b}}
//   Left(a):     X_Q = {X_{i-a}}
//   Right(b):    X_Q = {X_{i+b}}
//   Trivial:     X_Q empty, every node is nearby.
// An absent side has extent 0.
struct MarkovQuilt {
  int node = 1;
  int length = 1;
  QuiltShape shape = QuiltShape::kTrivial;
  int a = 0;
  int b = 0;

  static MarkovQuilt Trivial(int node, int length) {
    return {node, length, QuiltShape::kTrivial, 0, 0};
  }
  static MarkovQuilt Left(int node, int length, int a) {
    return {node, length, QuiltShape::kLeft, a, 0};
  }
  static MarkovQuilt Right(int node, int length, int b) {
    return {node, length, QuiltShape::kRight, 0, b};
  }
  static MarkovQuilt Pair(int node, int length, int a, int b) {
    return {node, length, QuiltShape::kPair, a, b};
  }

  bool has_left() const {
    return shape == QuiltShape::kLeft || shape == QuiltShape::kPair;
  }
  bool has_right() const {
    return shape == QuiltShape::kRight || shape == QuiltShape::kPair;
  }
  bool IsValid() const;
  // |X_N|, the nearby set including X_i.
  int NearbySize() const;
  std::vector<int> QuiltNodes() const;
  // "{X_3,X_13}", or "{}" for the trivial quilt.
  std::string ToString() const;

  friend bool operator==(const MarkovQuilt&, const MarkovQuilt&) = default;
};

// Deterministic order used to break score ties: smaller nearby set first,
// then lexicographic (a, b).
inline bool TieBreakLess(const MarkovQuilt& x, const MarkovQuilt& y) {
  return std::make_tuple(x.NearbySize(), x.a, x.b) <
         std::make_tuple(y.NearbySize(), y.a, y.b);
}

// Quilts considered at node i with maximum extent ell: pairs with a + b < ell,
// one-sided quilts whose nearby set has at most ell nodes, and the trivial
// quilt. Sorted by TieBreakLess. With ell >= T every chain quilt is present.
std::vector<MarkovQuilt> MinimalQuiltSet(int node, int length, int ell);

// |X_N| / (epsilon - influence), or infinity when influence >= epsilon.
double Score(const MarkovQuilt& quilt, double influence, double epsilon);

struct QuiltChoice {
  MarkovQuilt quilt;
  double influence = 0.0;
  double score = kInfinity;
  // True when the search stopped early because a score at or below the
  // caller's threshold was found; `score` is then only an upper bound.
  bool dominated = false;
};

// Minimum-score quilt over MinimalQuiltSet(node, length, ell), visiting quilts
// in tie-break order and stopping once |X_N| / epsilon reaches the best score.
// `influence(q)` returns the max-influence of a quilt. If a score <= `stop_at`
// is found the search returns immediately with `dominated` set.
template <typename InfluenceFn>
QuiltChoice BestQuiltForNode(int node, int length, int ell, double epsilon,
                             InfluenceFn&& influence,
                             double stop_at = -kInfinity) {
  const int i = node;
  const int t = length;
  QuiltChoice best;
  best.quilt = MarkovQuilt::Trivial(i, t);
  best.influence = 0.0;
  best.score = t / epsilon;
  bool best_is_trivial = true;
  auto consider = [&](const MarkovQuilt& q) {
    const double e = influence(q);
    const double s = Score(q, e, epsilon);
    if (s < best.score || (s == best.score && best_is_trivial)) {
      best.quilt = q;
      best.influence = e;
      best.score = s;
      best_is_trivial = false;
    }
    return s <= stop_at;
  };
  for (int s = 1; s < t; ++s) {
    if (s / epsilon >= best.score && !best_is_trivial) break;
    // Within one nearby size the tie-break order is Right, Left, then pairs
    // by increasing a.
    const int rb = s - i + 1;
    const int la = s - (t - i);
    if (s <= ell && rb >= 1 && rb <= t - i &&
        consider(MarkovQuilt::Right(i, t, rb))) {
      best.dominated = true;
      return best;
    }
    if (s <= ell && la >= 1 && la <= i - 1 &&
        consider(MarkovQuilt::Left(i, t, la))) {
      best.dominated = true;
      return best;
    }
    if (s + 1 < ell) {
      const int a_hi = std::min(i - 1, s);
      for (int a = std::max(1, s + 1 - (t - i)); a <= a_hi; ++a) {
        if (consider(MarkovQuilt::Pair(i, t, a, s + 1 - a))) {
          best.dominated = true;
          return best;
        }
      }
    }
  }
  if (best.score <= stop_at) best.dominated = true;
  return best;
}

}  // namespace pufferfish

#endif  // PUFFERFISH_MARKOV_QUILT_H_
