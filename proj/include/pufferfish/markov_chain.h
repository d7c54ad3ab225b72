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

#ifndef PUFFERFISH_MARKOV_CHAIN_H_
#define PUFFERFISH_MARKOV_CHAIN_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "absl/status/statusor.h"

namespace pufferfish {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Tolerance for probability vectors and stochastic rows.
inline constexpr double kSimplexTolerance = 1e-12;
// Tolerance for row sums after matrix products.
inline constexpr double kProductTolerance = 1e-10;

// A row-stochastic k x k matrix, k >= 2. Rows are P(x -> .), states are
// 0-based. Instances are always valid; construct through Create().
class TransitionMatrix {
 public:
  static absl::StatusOr<TransitionMatrix> Create(Matrix rows);
  // Divides every row by its sum first. Entries must still be non-negative
  // and every row must have positive mass.
  static absl::StatusOr<TransitionMatrix> CreateRenormalized(Matrix rows);

  int states() const { return static_cast<int>(rows_.rows()); }
  const Matrix& matrix() const { return rows_; }
  double operator()(int from, int to) const { return rows_(from, to); }

  friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
    return a.rows_ == b.rows_;
  }

 private:
  explicit TransitionMatrix(Matrix rows) : rows_(std::move(rows)) {}

  Matrix rows_;
};

// Unvalidated chain description, as read from a file or built by hand.
struct ChainSpec {
  Vector initial;
  Matrix transition;
  int length = 1;
};

struct Violation {
  std::string message;
  int row = -1;
  int col = -1;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string ToString() const;
};

// Checks a chain description without throwing or failing: every violation
// (negative or >1 entries, row sums, initial-distribution sum, dimension
// mismatch, non-positive length) is listed with its indices.
ValidationReport ValidateChain(const ChainSpec& spec);

// One member theta = (q, P) of a distribution class together with the chain
// length T. Immutable after construction.
class MarkovChainModel {
 public:
  static absl::StatusOr<MarkovChainModel> Create(const ChainSpec& spec);
  static absl::StatusOr<MarkovChainModel> Create(Vector initial,
                                                 TransitionMatrix transition,
                                                 int length);

  const Vector& initial() const { return initial_; }
  const TransitionMatrix& transition() const { return transition_; }
  int length() const { return length_; }
  int states() const { return transition_.states(); }

  MarkovChainModel WithLength(int length) const;

 private:
  MarkovChainModel(Vector initial, TransitionMatrix transition, int length)
      : initial_(std::move(initial)),
        transition_(std::move(transition)),
        length_(length) {}

  Vector initial_;
  TransitionMatrix transition_;
  int length_;
};

// Powers P^0 .. P^max_power. Each power is checked to stay row-stochastic
// within kProductTolerance.
absl::StatusOr<std::vector<Matrix>> MatrixPowers(const TransitionMatrix& p,
                                                 int max_power);

}  // namespace pufferfish

#endif  // PUFFERFISH_MARKOV_CHAIN_H_
