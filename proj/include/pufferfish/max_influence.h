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

#ifndef PUFFERFISH_MAX_INFLUENCE_H_
#define PUFFERFISH_MAX_INFLUENCE_H_

#include <optional>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "pufferfish/markov_chain.h"
#include "pufferfish/markov_quilt.h"

namespace pufferfish {

// Largest T * k^2 for which all-initials tables are built.
inline constexpr double kMaxAllInitsCells = 2e7;

// Cached terms for exact max-influence of chain quilts. The influence of a
// quilt around X_i is the largest, over admissible values x != x' of X_i, of
//   [log m_i(x') / m_i(x)]                       (quilts with a left end)
// + [max_y log P^a(y, x) / P^a(y, x')]            (left end at distance a)
// + [max_z log P^b(x, z) / P^b(x', z)]            (right end at distance b)
// where m_i is the marginal of X_i, x ranges over values with m_i(x) > 0 and
// y, z over all states. Ratios with a zero denominator are infinite. For a class of all initial distributions the first term becomes
// log max_y P^{i-1}(y, x') / P^{i-1}(y, x) and the supremum over the simplex
// is taken. Extents beyond `max_extent` are not supported.
//
// Not thread-safe: terms are filled lazily.
class InfluenceTable {
 public:
  static absl::StatusOr<InfluenceTable> ForChain(const MarkovChainModel& model,
                                                 int max_extent);
  static absl::StatusOr<InfluenceTable> ForAllInitials(const TransitionMatrix& p,
                                                       int length,
                                                       int max_extent);

  int length() const { return length_; }
  int states() const { return k_; }
  int max_extent() const { return max_extent_; }
  bool all_initials() const { return all_initials_; }
  // True when the initial distribution is stationary, so pair influences do
  // not depend on the node.
  bool stationary() const { return stationary_; }

  double Influence(const MarkovQuilt& quilt);

 private:
  InfluenceTable() = default;

  void SetSupports(const std::vector<std::vector<char>>& per_node);
  const Matrix& Forward(int b);
  const Matrix& Backward(int a);
  double Prior(int node, int x, int xp) const;

  int k_ = 0;
  int length_ = 0;
  int max_extent_ = 0;
  bool all_initials_ = false;
  bool stationary_ = false;
  std::vector<Matrix> powers_;
  Matrix log_marginal_;           // chain mode, node-major
  std::vector<Matrix> prior_;     // all-initials mode, per node
  std::vector<int> support_id_;   // per node
  std::vector<std::vector<int>> supports_;
  std::vector<std::optional<Matrix>> forward_;
  std::vector<std::optional<Matrix>> backward_;
  std::unordered_map<long long, double> pair_cache_;
};

double ExactMaxInfluence(const MarkovChainModel& model,
                         const MarkovQuilt& quilt);

double ExactInfluenceAllInits(const TransitionMatrix& p, int length,
                              const MarkovQuilt& quilt);

// Max-influence of an arbitrary node set on X_node (both 1-based), from the
// fully enumerated joint distribution. Requires k^T <= 10^6.
absl::StatusOr<double> BruteForceMaxInfluence(const MarkovChainModel& model,
                                              int node,
                                              const std::vector<int>& quilt_nodes);

absl::StatusOr<double> BruteForceMaxInfluence(const MarkovChainModel& model,
                                              const MarkovQuilt& quilt);

}  // namespace pufferfish

#endif  // PUFFERFISH_MAX_INFLUENCE_H_
