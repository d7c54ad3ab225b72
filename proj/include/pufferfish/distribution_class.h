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

#ifndef PUFFERFISH_DISTRIBUTION_CLASS_H_
#define PUFFERFISH_DISTRIBUTION_CLASS_H_

#include <span>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pufferfish/markov_chain.h"

namespace pufferfish {

// An explicit list of chains (q, P).
struct FiniteSet {
  std::vector<MarkovChainModel> chains;
};

// Every initial distribution in the simplex paired with each listed matrix.
struct MatrixSetAllInits {
  std::vector<TransitionMatrix> matrices;
  int length = 1;
};

// Binary chains P = [[p0, 1-p0], [1-p1, p1]] with p0, p1 on an inclusive grid
// over [alpha, beta], with all initial distributions.
struct BinaryInterval {
  double alpha = 0.0;
  double beta = 0.0;
  double grid_step = 0.01;
  int length = 1;
};

// A class known only through its mixing parameters.
struct MixingParams {
  double pi_min = 0.0;
  double g = 0.0;
  int states = 2;
  int length = 1;
  bool reversible = false;
};

using ClassVariant =
    std::variant<FiniteSet, MatrixSetAllInits, BinaryInterval, MixingParams>;

class DistributionClass {
 public:
  static absl::StatusOr<DistributionClass> Create(ClassVariant value);

  const ClassVariant& value() const { return value_; }
  int length() const;
  int states() const;
  // The same family over chains of a different length.
  DistributionClass WithLength(int length) const;

 private:
  explicit DistributionClass(ClassVariant value) : value_(std::move(value)) {}

  ClassVariant value_;
};

// Data for one chain of the class: length T, states in 0..k-1.
absl::Status CheckChainData(const DistributionClass& cls,
                            std::span<const int> data);

// Inclusive grid alpha, alpha + step, ..., ending exactly at beta.
std::vector<double> GridPoints(double alpha, double beta, double step);

absl::StatusOr<TransitionMatrix> BinaryTransition(double p0, double p1);

// Grid expansion of a binary interval, p0-major order.
absl::StatusOr<MatrixSetAllInits> ExpandGrid(const BinaryInterval& interval);

}  // namespace pufferfish

#endif  // PUFFERFISH_DISTRIBUTION_CLASS_H_
