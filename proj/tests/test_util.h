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

#ifndef PUFFERFISH_TESTS_TEST_UTIL_H_
#define PUFFERFISH_TESTS_TEST_UTIL_H_

#include <random>
#include <vector>

#include "pufferfish/distribution_class.h"
#include "pufferfish/markov_chain.h"

namespace pufferfish::testing {

inline Matrix Mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Vector Vec(std::initializer_list<double> v) {
  Vector out(v.size());
  int i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

inline Matrix P1() { return Mat2(0.9, 0.1, 0.4, 0.6); }
inline Matrix P2() { return Mat2(0.8, 0.2, 0.3, 0.7); }

inline MarkovChainModel Chain(const Vector& q, const Matrix& p, int t) {
  return *MarkovChainModel::Create(ChainSpec{q, p, t});
}

// {theta1 = ([1,0], P1), theta2 = ([0.9,0.1], P2)} over length t.
inline DistributionClass RunningExample(int t) {
  FiniteSet fs;
  fs.chains.push_back(Chain(Vec({1.0, 0.0}), P1(), t));
  fs.chains.push_back(Chain(Vec({0.9, 0.1}), P2(), t));
  return *DistributionClass::Create(fs);
}

// Probability vector with every entry at least `floor`.
inline Vector RandomSimplex(std::mt19937_64& rng, int k, double floor) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector v(k);
  for (int i = 0; i < k; ++i) v(i) = u(rng) + 1e-3;
  v /= v.sum();
  return v * (1.0 - k * floor) + Vector::Constant(k, floor);
}

inline Matrix RandomStochastic(std::mt19937_64& rng, int k, double floor) {
  Matrix p(k, k);
  for (int r = 0; r < k; ++r) p.row(r) = RandomSimplex(rng, k, floor).transpose();
  return p;
}

inline MarkovChainModel RandomChain(std::mt19937_64& rng, int k, int t,
                                    double floor) {
  return Chain(RandomSimplex(rng, k, floor), RandomStochastic(rng, k, floor), t);
}

}  // namespace pufferfish::testing

#endif  // PUFFERFISH_TESTS_TEST_UTIL_H_
