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

#include <cmath>
#include <random>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "pufferfish/distribution_class.h"
#include "pufferfish/laplace.h"
#include "pufferfish/markov_chain.h"
#include "pufferfish/query.h"
#include "test_util.h"

namespace pufferfish {
namespace {

using ::testing::HasSubstr;
using testing::Mat2;
using testing::P1;
using testing::Vec;

TEST(ValidateChain, RunningExampleIsValid) {
  EXPECT_TRUE(ValidateChain({Vec({1, 0}), P1(), 100}).ok());
}

TEST(ValidateChain, ReportsInitialSum) {
  ValidationReport r =
      ValidateChain({Vec({0.5, 0.6}), Matrix::Identity(2, 2), 3});
  ASSERT_FALSE(r.ok());
  EXPECT_THAT(r.ToString(), HasSubstr("q sums to 1.1"));
}

TEST(ValidateChain, ReportsRowEntriesWithIndices) {
  ValidationReport r = ValidateChain({Vec({1, 0}), Mat2(1.1, -0.1, 0.4, 0.6), 3});
  ASSERT_EQ(r.violations.size(), 2u);
  for (const Violation& v : r.violations) {
    EXPECT_EQ(v.row, 0);
    EXPECT_THAT(v.message, HasSubstr("outside [0,1]"));
  }
  EXPECT_EQ(r.violations[0].col, 0);
  EXPECT_EQ(r.violations[1].col, 1);
}

TEST(ValidateChain, ReportsShapeAndLength) {
  Matrix p(2, 3);
  p.setConstant(1.0 / 3);
  EXPECT_FALSE(ValidateChain({Vec({1, 0}), p, 3}).ok());
  EXPECT_THAT(ValidateChain({Vec({1, 0, 0}), P1(), 3}).ToString(),
              HasSubstr("q has length 3"));
  EXPECT_THAT(ValidateChain({Vec({1, 0}), P1(), 0}).ToString(),
              HasSubstr("chain length 0"));
}

TEST(TransitionMatrix, RejectsInvalidRows) {
  EXPECT_FALSE(TransitionMatrix::Create(Mat2(0.5, 0.6, 0.5, 0.5)).ok());
  EXPECT_FALSE(TransitionMatrix::Create(Matrix::Ones(1, 1)).ok());
  EXPECT_TRUE(TransitionMatrix::Create(P1()).ok());
}

TEST(TransitionMatrix, RenormalizesOnlyOnRequest) {
  Matrix raw = Mat2(2, 2, 1, 3);
  EXPECT_FALSE(TransitionMatrix::Create(raw).ok());
  absl::StatusOr<TransitionMatrix> p = TransitionMatrix::CreateRenormalized(raw);
  ASSERT_TRUE(p.ok());
  EXPECT_DOUBLE_EQ((*p)(0, 0), 0.5);
  EXPECT_DOUBLE_EQ((*p)(1, 1), 0.75);
  EXPECT_FALSE(TransitionMatrix::CreateRenormalized(Mat2(0, 0, 1, 1)).ok());
}

TEST(MatrixPowers, StayRowStochastic) {
  std::mt19937_64 rng(1);
  TransitionMatrix p = *TransitionMatrix::Create(testing::RandomStochastic(rng, 4, 0.0));
  absl::StatusOr<std::vector<Matrix>> powers = MatrixPowers(p, 200);
  ASSERT_TRUE(powers.ok());
  ASSERT_EQ(powers->size(), 201u);
  EXPECT_TRUE((*powers)[0].isIdentity());
  for (const Matrix& m : *powers) {
    EXPECT_LE((m.rowwise().sum().array() - 1.0).abs().maxCoeff(), 1e-10);
  }
  EXPECT_TRUE((*powers)[3].isApprox(p.matrix() * p.matrix() * p.matrix()));
}

TEST(MarkovChainModel, WithLengthKeepsParameters) {
  MarkovChainModel m = testing::Chain(Vec({1, 0}), P1(), 100);
  MarkovChainModel m5 = m.WithLength(5);
  EXPECT_EQ(m5.length(), 5);
  EXPECT_EQ(m5.transition(), m.transition());
  EXPECT_EQ(m5.states(), 2);
}

TEST(DistributionClass, ChecksInvariants) {
  EXPECT_FALSE(DistributionClass::Create(FiniteSet{}).ok());
  FiniteSet mixed;
  mixed.chains.push_back(testing::Chain(Vec({1, 0}), P1(), 10));
  mixed.chains.push_back(testing::Chain(Vec({1, 0}), P1(), 11));
  EXPECT_FALSE(DistributionClass::Create(mixed).ok());
  EXPECT_FALSE(DistributionClass::Create(BinaryInterval{0.6, 0.4, 0.01, 10}).ok());
  EXPECT_FALSE(DistributionClass::Create(BinaryInterval{0.0, 0.4, 0.01, 10}).ok());
  EXPECT_FALSE(DistributionClass::Create(BinaryInterval{0.1, 0.4, 0.0, 10}).ok());
  EXPECT_FALSE(DistributionClass::Create(MixingParams{0.6, 0.5, 2, 10}).ok());
  EXPECT_FALSE(DistributionClass::Create(MixingParams{0.2, 2.5, 2, 10}).ok());
  EXPECT_TRUE(DistributionClass::Create(MixingParams{0.2, 0.75, 2, 10}).ok());
  EXPECT_FALSE(DistributionClass::Create(MatrixSetAllInits{{}, 10}).ok());
}

TEST(DistributionClass, ReportsShape) {
  DistributionClass c = testing::RunningExample(100);
  EXPECT_EQ(c.length(), 100);
  EXPECT_EQ(c.states(), 2);
  EXPECT_EQ(c.WithLength(7).length(), 7);
  DistributionClass b = *DistributionClass::Create(BinaryInterval{0.1, 0.9, 0.01, 50});
  EXPECT_EQ(b.states(), 2);
  EXPECT_EQ(b.WithLength(20).length(), 20);
}

TEST(GridPoints, InclusiveEndpoints) {
  std::vector<double> g = GridPoints(0.1, 0.9, 0.01);
  ASSERT_EQ(g.size(), 81u);
  EXPECT_EQ(g.front(), 0.1);
  EXPECT_EQ(g.back(), 0.9);
  EXPECT_NEAR(g[40], 0.5, 1e-12);
  EXPECT_EQ(GridPoints(0.5, 0.5, 0.01).size(), 1u);
}

TEST(ExpandGrid, PZeroMajorOrder) {
  absl::StatusOr<MatrixSetAllInits> m = ExpandGrid(BinaryInterval{0.2, 0.3, 0.05, 10});
  ASSERT_TRUE(m.ok());
  ASSERT_EQ(m->matrices.size(), 9u);
  EXPECT_EQ(m->length, 10);
  EXPECT_NEAR(m->matrices[1](0, 0), 0.2, 1e-12);
  EXPECT_NEAR(m->matrices[1](1, 1), 0.25, 1e-12);
  EXPECT_NEAR(m->matrices[3](0, 0), 0.25, 1e-12);
  absl::StatusOr<TransitionMatrix> p = BinaryTransition(0.9, 0.6);
  ASSERT_TRUE(p.ok());
  EXPECT_TRUE(p->matrix().isApprox(P1()));
}

TEST(BuiltinQuery, LipschitzConstants) {
  LipschitzQuery rel = *BuiltinQuery("rel_freq_histogram", 100, 4);
  EXPECT_DOUBLE_EQ(rel.lipschitz, 0.02);
  EXPECT_EQ(rel.dim, 4);
  LipschitzQuery freq = *BuiltinQuery("state_frequency(1)", 100, 2);
  EXPECT_DOUBLE_EQ(freq.lipschitz, 0.01);
  EXPECT_EQ(freq.dim, 1);
  LipschitzQuery count = *BuiltinQuery("count_histogram", 37, 3);
  EXPECT_DOUBLE_EQ(count.lipschitz, 2.0);
  EXPECT_EQ(count.dim, 3);
  EXPECT_DOUBLE_EQ(BuiltinQuery("state_count(2)", 10, 3)->lipschitz, 1.0);
  EXPECT_DOUBLE_EQ(BuiltinQuery("value_sum", 10, 4)->lipschitz, 3.0);
}

TEST(BuiltinQuery, RejectsUnknownNamesAndStates) {
  EXPECT_FALSE(BuiltinQuery("median", 10, 2).ok());
  EXPECT_FALSE(BuiltinQuery("state_frequency(3)", 10, 2).ok());
  EXPECT_FALSE(BuiltinQuery("state_frequency(0)", 10, 2).ok());
}

TEST(BuiltinQuery, EvaluatesOnZeroBasedStates) {
  const std::vector<int> x = {0, 1, 1, 2};
  EXPECT_THAT(BuiltinQuery("count_histogram", 4, 3)->eval(x),
              ::testing::ElementsAre(1, 2, 1));
  EXPECT_THAT(BuiltinQuery("rel_freq_histogram", 4, 3)->eval(x),
              ::testing::ElementsAre(0.25, 0.5, 0.25));
  EXPECT_THAT(BuiltinQuery("state_frequency(2)", 4, 3)->eval(x),
              ::testing::ElementsAre(0.5));
  EXPECT_THAT(BuiltinQuery("value_sum", 4, 3)->eval(x), ::testing::ElementsAre(4));
}

class LipschitzProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(LipschitzProperty, SingleChangeWithinConstant) {
  std::mt19937_64 rng(42);
  const int t = 30;
  const int k = 4;
  LipschitzQuery q = *BuiltinQuery(GetParam(), t, k);
  std::uniform_int_distribution<int> state(0, k - 1);
  std::uniform_int_distribution<int> pos(0, t - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> x(t);
    for (int& v : x) v = state(rng);
    std::vector<int> y = x;
    y[pos(rng)] = state(rng);
    const std::vector<double> fx = q.eval(x);
    const std::vector<double> fy = q.eval(y);
    double l1 = 0.0;
    for (size_t j = 0; j < fx.size(); ++j) l1 += std::abs(fx[j] - fy[j]);
    ASSERT_LE(l1, q.lipschitz + 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Builtins, LipschitzProperty,
                         ::testing::Values("rel_freq_histogram",
                                           "count_histogram",
                                           "state_frequency(2)",
                                           "state_count(4)", "value_sum"));

TEST(BuiltinQuery, GroupSensitivity) {
  LipschitzQuery rel = *BuiltinQuery("rel_freq_histogram", 100, 3);
  EXPECT_DOUBLE_EQ(rel.group_sensitivity(60), 1.2);
  EXPECT_DOUBLE_EQ(BuiltinQuery("count_histogram", 100, 3)->group_sensitivity(60), 120);
  EXPECT_DOUBLE_EQ(BuiltinQuery("state_frequency(1)", 100, 2)->group_sensitivity(100), 1.0);
}

TEST(Laplace, Moments) {
  LaplaceSource src(123);
  std::vector<double> x = *src.Sample(1.0, 1'000'000);
  double mean = 0.0;
  double abs_mean = 0.0;
  for (double v : x) {
    mean += v;
    abs_mean += std::abs(v);
  }
  mean /= x.size();
  abs_mean /= x.size();
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(abs_mean, 1.0, 0.01);

  LaplaceSource src2(321);
  std::vector<double> y = *src2.Sample(2.0, 1'000'000);
  double abs2 = 0.0;
  for (double v : y) abs2 += std::abs(v);
  EXPECT_NEAR(abs2 / y.size(), 2.0, 0.02);
}

TEST(Laplace, Deterministic) {
  LaplaceSource a(99);
  LaplaceSource b(99);
  EXPECT_EQ(*a.Sample(1.0, 5), *b.Sample(1.0, 5));
  LaplaceSource c(100);
  EXPECT_NE(*LaplaceSource(99).Sample(1.0, 5), *c.Sample(1.0, 5));
}

TEST(Laplace, RejectsBadScale) {
  LaplaceSource src(1);
  EXPECT_FALSE(src.Sample(0.0, 3).ok());
  EXPECT_FALSE(src.Sample(-1.0, 3).ok());
  EXPECT_FALSE(src.Sample(std::numeric_limits<double>::infinity(), 3).ok());
}

TEST(Laplace, UniformIsOpenInterval) {
  LaplaceSource src(5);
  for (int i = 0; i < 100000; ++i) {
    const double u = src.NextUniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Laplace, DerivedStreamsDiffer) {
  LaplaceSource base(7);
  LaplaceSource d0 = base.Derive(0);
  LaplaceSource d1 = base.Derive(1);
  EXPECT_NE(d0.seed(), d1.seed());
  EXPECT_EQ(base.Derive(1).NextBits(), d1.NextBits());
}

}  // namespace
}  // namespace pufferfish
