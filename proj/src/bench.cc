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

#include "pufferfish/bench.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pufferfish/baselines.h"
#include "pufferfish/distribution_class.h"
#include "pufferfish/ingest.h"
#include "pufferfish/laplace.h"
#include "pufferfish/mixing.h"
#include "pufferfish/mqm_approx.h"
#include "pufferfish/mqm_exact.h"
#include "pufferfish/query.h"

namespace pufferfish {
namespace {

absl::StatusOr<double> CellScale(const std::string& mechanism,
                                 const DistributionClass& cls,
                                 const LipschitzQuery& query, double epsilon,
                                 const BenchConfig& config) {
  const int t = cls.length();
  absl::StatusOr<NoisePlan> plan;
  if (mechanism == "mqm_exact") {
    plan = MqmExactPlan(cls, query, epsilon, t,
                        ExactOptions{config.threads, /*detail=*/false});
  } else if (mechanism == "mqm_approx" || mechanism == "mqm_approx_fast") {
    absl::StatusOr<MixingSummary> s =
        ComputeMixingSummary(cls, GapMode::kReversible);
    if (!s.ok()) return s.status();
    plan = mechanism == "mqm_approx"
               ? MqmApproxPlan(*s, t, query, epsilon, t)
               : MqmApproxFastPlan(*s, t, query, epsilon);
  } else if (mechanism == "group_dp") {
    plan = GroupDpPlan(query, ChainSegmentation::Single(t), epsilon);
  } else if (mechanism == "entry_dp") {
    plan = EntryDpPlan(query, epsilon);
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("mechanism ", mechanism, " is not available in bench"));
  }
  if (!plan.ok()) return plan.status();
  return plan->laplace_scale;
}

}  // namespace

absl::StatusOr<std::vector<BenchCell>> RunBench(const BenchConfig& config) {
  if (config.trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  absl::StatusOr<LipschitzQuery> query =
      BuiltinQuery("state_frequency(2)", config.length, 2);
  if (!query.ok()) return query.status();
  const LaplaceSource base(config.seed);
  std::vector<BenchCell> out;
  for (double alpha : config.alphas) {
    const double beta = 1.0 - alpha;
    absl::StatusOr<DistributionClass> cls = DistributionClass::Create(
        BinaryInterval{alpha, beta, config.grid_step, config.length});
    if (!cls.ok()) return cls.status();
    for (double epsilon : config.epsilons) {
      for (const std::string& mech : config.mechanisms) {
        absl::StatusOr<double> scale = CellScale(mech, *cls, *query, epsilon, config);
        if (!scale.ok()) return scale.status();
        NoisePlan plan;
        plan.laplace_scale = *scale;
        BenchCell cell{alpha, epsilon, mech, *scale, 0.0, {}};
        cell.errors.reserve(config.trials);
        double sum = 0.0;
        for (int trial = 0; trial < config.trials; ++trial) {
          LaplaceSource rng = base.Derive(static_cast<uint64_t>(trial));
          const double p0 = alpha + (beta - alpha) * rng.NextUniform();
          const double p1 = alpha + (beta - alpha) * rng.NextUniform();
          const double q0 = rng.NextUniform();
          absl::StatusOr<TransitionMatrix> p = BinaryTransition(p0, p1);
          if (!p.ok()) return p.status();
          Vector q(2);
          q << q0, 1.0 - q0;
          absl::StatusOr<MarkovChainModel> model =
              MarkovChainModel::Create(q, *p, config.length);
          if (!model.ok()) return model.status();
          const std::vector<int> data = Synthesize(*model, rng);
          absl::StatusOr<PrivateRelease> r = Privatize(plan, *query, data, rng);
          if (!r.ok()) return r.status();
          const double err = std::abs(r->value[0] - r->exact[0]);
          cell.errors.push_back(err);
          sum += err;
        }
        cell.mean_error = sum / config.trials;
        out.push_back(std::move(cell));
      }
    }
  }
  return out;
}

}  // namespace pufferfish
