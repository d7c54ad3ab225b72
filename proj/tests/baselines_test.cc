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
#include <functional>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "pufferfish/baselines.h"
#include "pufferfish/mqm_exact.h"
#include "pufferfish/query.h"
#include "test_util.h"

namespace pufferfish {
namespace {

using ::testing::HasSubstr;

double L1(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

// Largest change of the query output over every sequence and every block of
// m consecutive records rewritten arbitrarily.
double BruteGroupSensitivity(const LipschitzQuery& q, int t, int k, int m) {
  double best = 0.0;
  std::vector<int> x(t, 0);
  std::function<void(int)> outer = [&](int pos) {
    if (pos == t) {
      const std::vector<double> fx = q.eval(x);
      for (int start = 0; start + m <= t; ++start) {
        std::vector<int> y = x;
        std::function<void(int)> inner = [&](int j) {
          if (j == start + m) {
            best = std::max(best, L1(fx, q.eval(y)));
            return;
          }
          for (int v = 0; v < k; ++v) {
            y[j] = v;
            inner(j + 1);
          }
        };
        inner(start);
      }
      return;
    }
    for (int v = 0; v < k; ++v) {
      x[pos] = v;
      outer(pos + 1);
    }
  };
  outer(0);
  return best;
}

TEST(Segmentation, CreateChecksCover) {
  EXPECT_TRUE(ChainSegmentation::Create({{0, 3}, {3, 5}}, 5).ok());
  EXPECT_FALSE(ChainSegmentation::Create({{0, 3}, {4, 5}}, 5).ok());
  EXPECT_FALSE(ChainSegmentation::Create({{0, 3}}, 5).ok());
  EXPECT_FALSE(ChainSegmentation::Create({}, 0).ok());
  ChainSegmentation s = *ChainSegmentation::Create({{0, 2}, {2, 9}, {9, 10}}, 10);
  EXPECT_EQ(s.longest(), 7);
  EXPECT_EQ(s.total(), 10);
  EXPECT_EQ(s.Lengths(), (std::vector<int>{2, 7, 1}));
}

TEST(GroupDp, WorkedValues) {
  LipschitzQuery f = *BuiltinQuery("state_frequency(1)", 100, 2);
  EXPECT_DOUBLE_EQ(*GroupDpScale(f, ChainSegmentation::Single(100), 1.0), 1.0);
  LipschitzQuery h = *BuiltinQuery("rel_freq_histogram", 100, 3);
  ChainSegmentation s = *ChainSegmentation::Create({{0, 60}, {60, 100}}, 100);
  EXPECT_DOUBLE_EQ(*GroupDpScale(h, s, 1.0), 1.2);
  EXPECT_DOUBLE_EQ(*GroupDpScale(h, s, 2.0), 0.6);
}

TEST(GroupDp, SingletonSegmentsMatchEntryDp) {
  std::vector<std::pair<int, int>> segs;
  for (int i = 0; i < 20; ++i) segs.push_back({i, i + 1});
  ChainSegmentation s = *ChainSegmentation::Create(segs, 20);
  for (const char* name : {"rel_freq_histogram", "count_histogram", "state_count(2)", "value_sum"}) {
    LipschitzQuery q = *BuiltinQuery(name, 20, 3);
    EXPECT_DOUBLE_EQ(*GroupDpScale(q, s, 0.7), *EntryDpScale(q, 0.7)) << name;
  }
}

TEST(GroupDp, SensitivityMatchesBruteForce) {
  const int t = 5;
  const int k = 3;
  for (const char* name : {"rel_freq_histogram", "count_histogram", "state_count(1)",
                           "state_frequency(3)", "value_sum"}) {
    LipschitzQuery q = *BuiltinQuery(name, t, k);
    for (int m = 1; m <= 3; ++m) {
      EXPECT_NEAR(q.group_sensitivity(m), BruteGroupSensitivity(q, t, k, m), 1e-12)
          << name << " m=" << m;
    }
  }
}

TEST(EntryDp, WorkedValues) {
  EXPECT_DOUBLE_EQ(*EntryDpScale(*BuiltinQuery("count_histogram", 50, 4), 1.0), 2.0);
  EXPECT_DOUBLE_EQ(*EntryDpScale(*BuiltinQuery("count_histogram", 50, 4), 5.0), 0.4);
  EXPECT_DOUBLE_EQ(*EntryDpScale(*BuiltinQuery("state_frequency(1)", 100, 2), 1.0), 0.01);
  EXPECT_FALSE(EntryDpScale(*BuiltinQuery("count_histogram", 5, 2), 0.0).ok());
  EXPECT_FALSE(EntryDpScale(*BuiltinQuery("count_histogram", 5, 2), INFINITY).ok());
}

TEST(GroupDp, NeverBelowEntryDp) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> len(1, 30);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<int, int>> segs;
    int at = 0;
    for (int i = 0; i < 4; ++i) {
      const int l = len(rng);
      segs.push_back({at, at + l});
      at += l;
    }
    ChainSegmentation s = *ChainSegmentation::Create(segs, at);
    LipschitzQuery q = *BuiltinQuery("rel_freq_histogram", at, 3);
    EXPECT_GE(*GroupDpScale(q, s, 1.0), *EntryDpScale(q, 1.0));
  }
}

TEST(GroupDp, RefusesQueriesWithoutGroupSensitivity) {
  LipschitzQuery custom;
  custom.name = "custom";
  custom.lipschitz = 1.0;
  custom.eval = [](std::span<const int> x) { return std::vector<double>{double(x.size())}; };
  absl::StatusOr<double> s = GroupDpScale(custom, ChainSegmentation::Single(10), 1.0);
  ASSERT_FALSE(s.ok());
  EXPECT_THAT(std::string(s.status().message()), HasSubstr("group sensitivity"));
  EXPECT_DOUBLE_EQ(*EntryDpScale(custom, 1.0), 1.0);
}

TEST(GroupDp, PlanFields) {
  LipschitzQuery q = *BuiltinQuery("state_frequency(1)", 100, 2);
  NoisePlan plan = *GroupDpPlan(q, ChainSegmentation::Single(100), 1.0);
  EXPECT_EQ(plan.mechanism, "group_dp");
  EXPECT_DOUBLE_EQ(plan.laplace_scale, 1.0);
  EXPECT_DOUBLE_EQ(plan.sigma_max, 100.0);
  EXPECT_EQ(plan.length, 100);
  EXPECT_EQ(EntryDpPlan(q, 1.0)->mechanism, "entry_dp");
}

TEST(GroupDp, QuiltMechanismIsTighterOnRunningExample) {
  LipschitzQuery q = *BuiltinQuery("state_frequency(1)", 100, 2);
  NoisePlan exact = *MqmExactPlan(testing::RunningExample(100), q, 1.0, 100);
  EXPECT_LT(exact.laplace_scale, *GroupDpScale(q, ChainSegmentation::Single(100), 1.0));
  EXPECT_NEAR(exact.laplace_scale, 13.021923 / 100, 1e-6);
}

}  // namespace
}  // namespace pufferfish
