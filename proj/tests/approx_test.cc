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

#include "pufferfish/max_influence.h"
#include "pufferfish/mixing.h"
#include "pufferfish/mqm_approx.h"
#include "pufferfish/mqm_exact.h"
#include "pufferfish/query.h"
#include "test_util.h"

namespace pufferfish {
namespace {

using ::testing::HasSubstr;
using testing::Mat2;
using testing::P1;
using testing::P2;
using testing::RunningExample;

TransitionMatrix T(const Matrix& m) { return *TransitionMatrix::Create(m); }

MixingSummary Params(double pi_min, double g) {
  MixingSummary s;
  s.pi_min = pi_min;
  s.g = g;
  return s;
}

TEST(Stationary, WorkedChains) {
  Vector a = *StationaryDistribution(T(P1()));
  EXPECT_NEAR(a(0), 0.8, 1e-12);
  EXPECT_NEAR(a(1), 0.2, 1e-12);
  Vector b = *StationaryDistribution(T(P2()));
  EXPECT_NEAR(b(0), 0.6, 1e-12);
  EXPECT_NEAR(b(1), 0.4, 1e-12);
}

TEST(Stationary, DoublyStochasticIsUniform) {
  Matrix p(3, 3);
  p << 0.2, 0.5, 0.3, 0.3, 0.2, 0.5, 0.5, 0.3, 0.2;
  Vector pi = *StationaryDistribution(T(p));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(pi(i), 1.0 / 3, 1e-12);
}

TEST(Stationary, RejectsNonMixingChains) {
  absl::StatusOr<Vector> periodic = StationaryDistribution(T(Mat2(0, 1, 1, 0)));
  EXPECT_THAT(std::string(periodic.status().message()), HasSubstr("chain does not mix"));
  EXPECT_FALSE(StationaryDistribution(T(Matrix::Identity(2, 2))).ok());
  EXPECT_FALSE(IsPrimitive(T(Mat2(1, 0, 0.5, 0.5))));
  EXPECT_TRUE(IsPrimitive(T(Mat2(0, 1, 0.5, 0.5))));
}

TEST(Stationary, FixedPointOnRandomChains) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix p = testing::RandomStochastic(rng, 2 + trial % 4, 0.01);
    Vector pi = *StationaryDistribution(T(p));
    EXPECT_LE((pi.transpose() * p - pi.transpose()).cwiseAbs().sum(), 1e-10);
    EXPECT_NEAR(pi.sum(), 1.0, 1e-12);
  }
}

TEST(TimeReversal, ReversibleChainsAreTheirOwnReversal) {
  for (const Matrix& m : {P1(), P2()}) {
    Vector pi = *StationaryDistribution(T(m));
    EXPECT_TRUE(IsReversible(T(m), pi));
    EXPECT_TRUE(TimeReversal(T(m), pi)->matrix().isApprox(m, 1e-12));
  }
}

TEST(TimeReversal, InvolutionOnRandomChains) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix p = testing::RandomStochastic(rng, 3, 0.01);
    Vector pi = *StationaryDistribution(T(p));
    TransitionMatrix rev = *TimeReversal(T(p), pi);
    EXPECT_LE((rev.matrix().rowwise().sum().array() - 1).abs().maxCoeff(), 1e-10);
    EXPECT_LE((TimeReversal(rev, pi)->matrix() - p).cwiseAbs().maxCoeff(), 1e-10);
  }
  Vector bad(2);
  bad << 1.0, 0.0;
  EXPECT_FALSE(TimeReversal(T(P1()), bad).ok());
}

TEST(SymmetricEigenvalues, MatchesReferenceSolver) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + trial % 6;
    Matrix a(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) a(i, j) = u(rng);
    }
    Matrix s = a + a.transpose();
    std::vector<double> mine = *SymmetricEigenvalues(s);
    Eigen::SelfAdjointEigenSolver<Matrix> ref(s);
    ASSERT_EQ(static_cast<int>(mine.size()), k);
    for (int i = 0; i < k; ++i) {
      EXPECT_NEAR(mine[i], ref.eigenvalues()(k - 1 - i), 1e-10);
    }
  }
}

TEST(Eigengap, PPStarWorkedValue) {
  EXPECT_NEAR(*Eigengap(T(P1()), GapMode::kPPStar), 0.75, 1e-12);
  EXPECT_NEAR(*Eigengap(T(P2()), GapMode::kPPStar), 0.75, 1e-12);
}

TEST(Eigengap, ReversibleMode) {
  // Eigenvalues of a 2x2 stochastic matrix are 1 and trace - 1.
  const double lambda2 = P1().trace() - 1.0;
  EXPECT_NEAR(*Eigengap(T(P1()), GapMode::kReversible), 2 * (1 - std::abs(lambda2)), 1e-12);
  EXPECT_NEAR(*Eigengap(T(P1()), GapMode::kReversible), 1.0, 1e-12);
  Matrix cyc(3, 3);
  cyc << 0.1, 0.8, 0.1, 0.1, 0.1, 0.8, 0.8, 0.1, 0.1;
  EXPECT_FALSE(Eigengap(T(cyc), GapMode::kReversible).ok());
  EXPECT_TRUE(Eigengap(T(cyc), GapMode::kPPStar).ok());
  EXPECT_FALSE(Eigengap(T(Matrix::Identity(2, 2)), GapMode::kPPStar).ok());
}

TEST(Eigengap, PPStarAgreesWithGeneralSolver) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix p = testing::RandomStochastic(rng, 3, 0.02);
    Vector pi = *StationaryDistribution(T(p));
    Matrix pstar = TimeReversal(T(p), pi)->matrix();
    Eigen::EigenSolver<Matrix> es(p * pstar);
    std::vector<double> mags;
    for (int i = 0; i < 3; ++i) mags.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(mags.begin(), mags.end());
    EXPECT_NEAR(*Eigengap(T(p), GapMode::kPPStar), 1 - mags[1], 1e-9);
  }
}

TEST(MixingSummary, RunningExample) {
  MixingSummary s = *ComputeMixingSummary(RunningExample(100));
  EXPECT_NEAR(s.pi_min, 0.2, 1e-12);
  EXPECT_NEAR(s.g, 0.75, 1e-12);
  EXPECT_EQ(s.pi.size(), 2u);
  EXPECT_EQ(s.length, 100);
}

TEST(MixingSummary, ParamsPassThrough) {
  DistributionClass c = *DistributionClass::Create(MixingParams{0.2, 0.75, 2, 50});
  MixingSummary s = *ComputeMixingSummary(c);
  EXPECT_EQ(s.pi_min, 0.2);
  EXPECT_EQ(s.g, 0.75);
  EXPECT_EQ(s.mode, GapMode::kPPStar);
  DistributionClass r = *DistributionClass::Create(MixingParams{0.2, 1.5, 2, 50, true});
  EXPECT_EQ(ComputeMixingSummary(r)->mode, GapMode::kReversible);
}

TEST(MixingSummary, BinaryIntervalClosedForms) {
  DistributionClass half = *DistributionClass::Create(BinaryInterval{0.5, 0.5, 0.01, 10});
  MixingSummary s = *ComputeMixingSummary(half, GapMode::kReversible);
  EXPECT_NEAR(s.pi_min, 0.5, 1e-12);
  EXPECT_NEAR(s.g, 2.0, 1e-12);
}

TEST(MixingSummary, BinaryIntervalMatchesExplicitGrid) {
  BinaryInterval bi{0.2, 0.8, 0.05, 10};
  for (GapMode mode : {GapMode::kPPStar, GapMode::kReversible}) {
    MixingSummary closed = *ComputeMixingSummary(*DistributionClass::Create(bi), mode);
    MixingSummary grid = *ComputeMixingSummary(*DistributionClass::Create(*ExpandGrid(bi)), mode);
    EXPECT_NEAR(closed.pi_min, grid.pi_min, 1e-12);
    EXPECT_NEAR(closed.g, grid.g, 1e-9);
  }
}

TEST(InfluenceBound, Values) {
  MixingSummary s = Params(0.2, 0.75);
  EXPECT_EQ(InfluenceBound(s, MarkovQuilt::Trivial(50, 100)), 0.0);
  const double d = std::exp(-0.75 * 12 / 2);
  const double term = std::log((0.2 + d) / (0.2 - d));
  EXPECT_NEAR(InfluenceBound(s, MarkovQuilt::Pair(50, 100, 12, 12)), 3 * term, 1e-12);
  EXPECT_NEAR(InfluenceBound(s, MarkovQuilt::Pair(50, 100, 12, 12)),
              3 * std::log(0.211109 / 0.188891), 1e-4);
  EXPECT_NEAR(InfluenceBound(s, MarkovQuilt::Pair(50, 100, 12, 12)), 0.3337, 1e-4);
  EXPECT_NEAR(InfluenceBound(s, MarkovQuilt::Left(50, 100, 12)), 2 * term, 1e-12);
  EXPECT_NEAR(InfluenceBound(s, MarkovQuilt::Right(50, 100, 12)), term, 1e-12);
}

TEST(InfluenceBound, ThresholdGate) {
  MixingSummary s = Params(0.2, 0.75);
  const double threshold = 2 * std::log(5.0) / 0.75;
  EXPECT_NEAR(BoundThreshold(s), threshold, 1e-12);
  const int first = static_cast<int>(std::ceil(threshold));
  EXPECT_TRUE(std::isinf(InfluenceBound(s, MarkovQuilt::Pair(50, 100, first - 1, 20))));
  EXPECT_TRUE(std::isinf(InfluenceBound(s, MarkovQuilt::Pair(50, 100, 20, first - 1))));
  EXPECT_TRUE(std::isfinite(InfluenceBound(s, MarkovQuilt::Pair(50, 100, first, first))));
  // Exactly at the threshold the denominator vanishes.
  MixingSummary edge = Params(std::exp(-0.5), 0.5);
  EXPECT_EQ(BoundThreshold(edge), 2.0);
  EXPECT_TRUE(std::isinf(BoundTerm(edge, 2)));
}

TEST(InfluenceBound, StrictlyDecreasingInExtent) {
  MixingSummary s = Params(0.2, 0.75);
  for (int a = 5; a < 40; ++a) {
    EXPECT_LT(InfluenceBound(s, MarkovQuilt::Pair(60, 120, a + 1, 10)),
              InfluenceBound(s, MarkovQuilt::Pair(60, 120, a, 10)));
    EXPECT_LT(InfluenceBound(s, MarkovQuilt::Pair(60, 120, 10, a + 1)),
              InfluenceBound(s, MarkovQuilt::Pair(60, 120, 10, a)));
  }
}

TEST(AStar, WorkedValueAndMonotonicity) {
  EXPECT_EQ(AStar(Params(0.2, 0.75), 1.0), 12);
  int prev = 1 << 30;
  for (double eps : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const int a = AStar(Params(0.2, 0.75), eps);
    EXPECT_LE(a, prev);
    prev = a;
  }
  EXPECT_LE(AStar(Params(0.2, 1.5), 1.0), AStar(Params(0.2, 0.75), 1.0));
}

TEST(MqmApprox, SingleChainRegression) {
  FiniteSet fs;
  fs.chains.push_back(testing::Chain(testing::Vec({1, 0}), P1(), 100));
  DistributionClass cls = *DistributionClass::Create(fs);
  MixingSummary s = *ComputeMixingSummary(cls);
  LipschitzQuery q = *BuiltinQuery("state_frequency(1)", 100, 2);
  NoisePlan plan = *MqmApproxPlan(s, 100, q, 1.0, 100);
  EXPECT_NEAR(plan.sigma_max, 31.709760252306847, 1e-9);
  EXPECT_LT(plan.sigma_max, 100.0);
  EXPECT_EQ(plan.a_star, 12);
  ASSERT_EQ(plan.per_node.size(), 100u);
  EXPECT_EQ(plan.per_node[49].quilt.shape, QuiltShape::kPair);
}

TEST(MqmApprox, LengthOne) {
  LipschitzQuery q = *BuiltinQuery("state_frequency(1)", 1, 2);
  EXPECT_EQ(MqmApproxPlan(Params(0.2, 0.75), 1, q, 2.0, 1)->sigma_max, 0.5);
}

TEST(MqmApprox, FallsBackToTrivialWhenNothingQualifies) {
  LipschitzQuery q = *BuiltinQuery("state_frequency(1)", 10, 2);
  NoisePlan plan = *MqmApproxPlan(Params(0.01, 0.05), 10, q, 1.0, 10);
  EXPECT_EQ(plan.sigma_max, 10.0);
  EXPECT_FALSE(plan.notes.empty());
}

TEST(MqmApprox, LengthIndependence) {
  LipschitzQuery q = *BuiltinQuery("state_frequency(1)", 500, 2);
  MixingSummary s = Params(0.2, 0.75);
  EXPECT_EQ(MqmApproxPlan(s, 500, q, 1.0, 500)->sigma_max,
            MqmApproxPlan(s, 2000, q, 1.0, 2000)->sigma_max);
}

TEST(MqmApproxFast, MatchesFullSearchAndIsBounded) {
  MixingSummary s = *ComputeMixingSummary(RunningExample(100));
  LipschitzQuery q = *BuiltinQuery("state_frequency(1)", 200, 2);
  NoisePlan fast = *MqmApproxFastPlan(s, 200, q, 1.0);
  NoisePlan full = *MqmApproxPlan(s, 200, q, 1.0, 48);
  EXPECT_FALSE(fast.fallback);
  EXPECT_EQ(fast.sigma_max, full.sigma_max);
  EXPECT_LE(fast.sigma_max, (4 * 12 - 2) / 1.0);
  ASSERT_EQ(fast.per_node.size(), 1u);
  EXPECT_EQ(fast.per_node[0].node, 100);
}

TEST(MqmApproxFast, ShortChainsFallBack) {
  LipschitzQuery q = *BuiltinQuery("state_frequency(1)", 50, 2);
  NoisePlan fast = *MqmApproxFastPlan(Params(0.2, 0.75), 50, q, 1.0);
  EXPECT_TRUE(fast.fallback);
  EXPECT_EQ(fast.sigma_max, MqmApproxPlan(Params(0.2, 0.75), 50, q, 1.0, 48)->sigma_max);
}

// Wherever a node's optimum is a two-sided quilt, no other node needs more
// noise.
TEST(MqmApprox, InteriorPairOptimumDominates) {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> pi(0.05, 0.5);
  std::uniform_real_distribution<double> g(0.2, 1.5);
  std::uniform_real_distribution<double> e(0.3, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    MixingSummary s = Params(pi(rng), g(rng));
    const double eps = e(rng);
    const int t = std::max(8 * AStar(s, eps) + 3, 20);
    LipschitzQuery q = *BuiltinQuery("state_frequency(1)", t, 2);
    NoisePlan plan = *MqmApproxPlan(s, t, q, eps, t);
    for (const NodeResult& r : plan.per_node) {
      if (r.quilt.shape != QuiltShape::kPair) continue;
      for (const NodeResult& other : plan.per_node) EXPECT_LE(other.sigma, r.sigma);
    }
  }
}

TEST(MqmApprox, BoundIsSoundForSampledChains) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    MarkovChainModel m = testing::RandomChain(rng, 3, 40, 0.05);
    FiniteSet fs;
    fs.chains.push_back(m);
    DistributionClass cls = *DistributionClass::Create(fs);
    absl::StatusOr<MixingSummary> s = ComputeMixingSummary(cls);
    ASSERT_TRUE(s.ok());
    InfluenceTable table = *InfluenceTable::ForChain(m, 40);
    for (int i = 1; i <= 40; i += 3) {
      for (const MarkovQuilt& quilt : MinimalQuiltSet(i, 40, 40)) {
        const double bound = InfluenceBound(*s, quilt);
        if (std::isfinite(bound)) EXPECT_GE(bound, table.Influence(quilt) - 1e-9);
      }
    }
    LipschitzQuery q = *BuiltinQuery("rel_freq_histogram", 40, 3);
    EXPECT_GE(MqmApproxPlan(*s, 40, q, 1.0, 40)->sigma_max,
              MqmExactPlan(cls, q, 1.0, 40)->sigma_max);
  }
}

TEST(MqmApprox, ReleaseUsesPlanScale) {
  DistributionClass cls = RunningExample(100);
  LipschitzQuery q = *BuiltinQuery("state_frequency(1)", 100, 2);
  std::vector<int> data(100, 1);
  LaplaceSource a(3);
  LaplaceSource b(3);
  PrivateRelease full = *MqmApprox(cls, q, data, 1.0, 100, GapMode::kPPStar, a);
  PrivateRelease fast = *MqmApproxFast(cls, q, data, 1.0, GapMode::kPPStar, b);
  EXPECT_EQ(full.value, fast.value);
  EXPECT_NEAR(full.plan.laplace_scale, 0.01 * full.plan.sigma_max, 1e-15);
  EXPECT_FALSE(MqmApprox(cls, q, std::vector<int>(5, 0), 1.0, 100, GapMode::kPPStar, a).ok());
}

}  // namespace
}  // namespace pufferfish
