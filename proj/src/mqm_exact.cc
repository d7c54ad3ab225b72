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

#include "pufferfish/mqm_exact.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>
#include <variant>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "pufferfish/max_influence.h"

namespace pufferfish {
namespace {

// One member of the class: either a fixed chain or a matrix with all
// initial distributions.
struct Member {
  const MarkovChainModel* chain = nullptr;
  const TransitionMatrix* matrix = nullptr;
};

struct MemberResult {
  absl::Status status;
  std::vector<QuiltChoice> nodes;
  double sigma_max = 0.0;
  int arg_node = 1;
};

void AtomicMax(std::atomic<double>& target, double v) {
  double cur = target.load();
  while (v > cur && !target.compare_exchange_weak(cur, v)) {
  }
}

MemberResult RunMember(const Member& m, int length, int ell, double epsilon,
                       bool detail, std::atomic<double>& running) {
  MemberResult out;
  const int extent = std::min(length - 1, ell);
  absl::StatusOr<InfluenceTable> table =
      m.chain != nullptr
          ? InfluenceTable::ForChain(*m.chain, extent)
          : InfluenceTable::ForAllInitials(*m.matrix, length, extent);
  if (!table.ok()) {
    out.status = table.status();
    return out;
  }
  auto influence = [&](const MarkovQuilt& q) { return table->Influence(q); };
  out.sigma_max = -kInfinity;
  for (int i = 1; i <= length; ++i) {
    const double stop = detail ? -kInfinity : running.load();
    QuiltChoice c = BestQuiltForNode(i, length, ell, epsilon, influence, stop);
    if (!c.dominated && c.score > out.sigma_max) {
      out.sigma_max = c.score;
      out.arg_node = i;
      if (!detail) AtomicMax(running, c.score);
    }
    if (detail) out.nodes.push_back(c);
  }
  return out;
}

absl::StatusOr<std::vector<Member>> Members(const ClassVariant& v,
                                            MatrixSetAllInits& expanded) {
  std::vector<Member> members;
  if (const auto* fs = std::get_if<FiniteSet>(&v)) {
    for (const auto& c : fs->chains) members.push_back({&c, nullptr});
  } else if (const auto* ms = std::get_if<MatrixSetAllInits>(&v)) {
    for (const auto& p : ms->matrices) members.push_back({nullptr, &p});
  } else if (const auto* bi = std::get_if<BinaryInterval>(&v)) {
    absl::StatusOr<MatrixSetAllInits> grid = ExpandGrid(*bi);
    if (!grid.ok()) return grid.status();
    expanded = *std::move(grid);
    for (const auto& p : expanded.matrices) members.push_back({nullptr, &p});
  } else {
    return absl::InvalidArgumentError(
        "exact max-influence needs explicit chains; use mqm_approx for "
        "mixing parameters");
  }
  if (members.empty()) return absl::InvalidArgumentError("empty class");
  return members;
}

}  // namespace

absl::Status CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError("epsilon must be positive and finite");
  }
  return absl::OkStatus();
}

absl::StatusOr<NoisePlan> MqmExactPlan(const DistributionClass& cls,
                                       const LipschitzQuery& query,
                                       double epsilon, int ell,
                                       const ExactOptions& options) {
  if (absl::Status s = CheckEpsilon(epsilon); !s.ok()) return s;
  if (ell < 1) return absl::InvalidArgumentError("ell must be >= 1");
  MatrixSetAllInits expanded;
  absl::StatusOr<std::vector<Member>> members = Members(cls.value(), expanded);
  if (!members.ok()) return members.status();
  const int length = cls.length();
  const int count = static_cast<int>(members->size());

  std::vector<MemberResult> results(count);
  std::atomic<int> next{0};
  std::atomic<double> running{-kInfinity};
  auto worker = [&] {
    for (int j = next++; j < count; j = next++) {
      results[j] = RunMember((*members)[j], length, ell, epsilon,
                             options.detail, running);
    }
  };
  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, count);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  NoisePlan plan;
  plan.mechanism = "mqm_exact";
  plan.epsilon = epsilon;
  plan.lipschitz = query.lipschitz;
  plan.length = length;
  plan.ell = ell;
  plan.sigma_max = -kInfinity;
  for (int j = 0; j < count; ++j) {
    if (!results[j].status.ok()) return results[j].status;
    plan.sigma_max = std::max(plan.sigma_max, results[j].sigma_max);
  }
  if (options.detail) {
    for (int i = 1; i <= length; ++i) {
      NodeResult best;
      best.node = i;
      best.sigma = -kInfinity;
      for (int j = 0; j < count; ++j) {
        const QuiltChoice& c = results[j].nodes[i - 1];
        if (c.score > best.sigma) {
          best = {i, c.quilt, c.influence, c.score, j};
        }
      }
      plan.per_node.push_back(best);
    }
    for (int j = 0; j < count; ++j) {
      const MemberResult& r = results[j];
      const QuiltChoice& c = r.nodes[r.arg_node - 1];
      plan.per_theta.push_back({j, r.sigma_max, r.arg_node, c.quilt, c.influence});
    }
  } else {
    plan.notes.push_back("scale only: per-node detail not recorded");
  }
  plan.laplace_scale = plan.lipschitz * plan.sigma_max;
  return plan;
}

absl::StatusOr<NoisePlan> MqmExactPlanForLengths(
    const DistributionClass& cls, const LipschitzQuery& query, double epsilon,
    int ell, const std::vector<int>& lengths, const ExactOptions& options) {
  const std::set<int> distinct(lengths.begin(), lengths.end());
  if (distinct.empty()) return absl::InvalidArgumentError("no segments");
  std::optional<NoisePlan> best;
  for (int len : distinct) {
    absl::StatusOr<NoisePlan> plan =
        MqmExactPlan(cls.WithLength(len), query, epsilon, ell, options);
    if (!plan.ok()) return plan.status();
    if (!best || plan->sigma_max > best->sigma_max) best = *std::move(plan);
  }
  best->laplace_scale = best->lipschitz * best->sigma_max;
  if (distinct.size() > 1) {
    best->notes.push_back(absl::StrFormat(
        "maximum over %d distinct segment lengths; detail is for length %d",
        distinct.size(), best->length));
  }
  return *std::move(best);
}

absl::StatusOr<PrivateRelease> MqmExact(const DistributionClass& cls,
                                        const LipschitzQuery& query,
                                        std::span<const int> data,
                                        double epsilon, int ell,
                                        LaplaceSource& src,
                                        const ExactOptions& options) {
  if (absl::Status s = CheckChainData(cls, data); !s.ok()) return s;
  absl::StatusOr<NoisePlan> plan =
      MqmExactPlan(cls, query, epsilon, ell, options);
  if (!plan.ok()) return plan.status();
  return Privatize(*plan, query, data, src);
}

}  // namespace pufferfish
