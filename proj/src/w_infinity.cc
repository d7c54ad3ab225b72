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

#include "pufferfish/w_infinity.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "absl/status/status.h"

namespace pufferfish {
namespace {

constexpr int kOracleMaxAtoms = 16;
constexpr double kFlowTolerance = 1e-9;

// Edmonds-Karp on a dense capacity matrix.
double MaxFlow(std::vector<std::vector<double>> cap, int source, int sink) {
  const int n = static_cast<int>(cap.size());
  double flow = 0.0;
  while (true) {
    std::vector<int> parent(n, -1);
    parent[source] = source;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty() && parent[sink] < 0) {
      const int u = frontier.front();
      frontier.pop();
      for (int v = 0; v < n; ++v) {
        if (parent[v] < 0 && cap[u][v] > kSegmentTolerance) {
          parent[v] = u;
          frontier.push(v);
        }
      }
    }
    if (parent[sink] < 0) return flow;
    double push = std::numeric_limits<double>::infinity();
    for (int v = sink; v != source; v = parent[v]) {
      push = std::min(push, cap[parent[v]][v]);
    }
    for (int v = sink; v != source; v = parent[v]) {
      cap[parent[v]][v] -= push;
      cap[v][parent[v]] += push;
    }
    flow += push;
  }
}

}  // namespace

double WInfinity(const DiscreteDistribution& mu,
                 const DiscreteDistribution& nu) {
  const auto& a = mu.atoms();
  const auto& b = nu.atoms();
  size_t i = 0, j = 0;
  double ra = a.empty() ? 0.0 : a[0].prob;
  double rb = b.empty() ? 0.0 : b[0].prob;
  double w = 0.0;
  while (i < a.size() && j < b.size()) {
    const double m = std::min(ra, rb);
    if (m > kSegmentTolerance) {
      w = std::max(w, std::abs(a[i].value - b[j].value));
    }
    ra -= m;
    rb -= m;
    if (ra <= kSegmentTolerance && ++i < a.size()) ra += a[i].prob;
    if (rb <= kSegmentTolerance && ++j < b.size()) rb += b[j].prob;
  }
  return w;
}

absl::StatusOr<double> WInfinityOracle(const DiscreteDistribution& mu,
                                       const DiscreteDistribution& nu) {
  const int na = mu.size();
  const int nb = nu.size();
  if (na + nb > kOracleMaxAtoms) {
    return absl::InvalidArgumentError("oracle limited to 16 combined atoms");
  }
  std::vector<double> candidates;
  for (const Atom& x : mu.atoms()) {
    for (const Atom& y : nu.atoms()) candidates.push_back(std::abs(x.value - y.value));
  }
  std::sort(candidates.begin(), candidates.end());
  const int source = na + nb;
  const int sink = source + 1;
  for (double w : candidates) {
    std::vector<std::vector<double>> cap(sink + 1,
                                         std::vector<double>(sink + 1, 0.0));
    for (int i = 0; i < na; ++i) {
      cap[source][i] = mu.atoms()[i].prob;
      for (int j = 0; j < nb; ++j) {
        if (std::abs(mu.atoms()[i].value - nu.atoms()[j].value) <= w) {
          cap[i][na + j] = 2.0;
        }
      }
    }
    for (int j = 0; j < nb; ++j) cap[na + j][sink] = nu.atoms()[j].prob;
    if (MaxFlow(std::move(cap), source, sink) >= 1.0 - kFlowTolerance) return w;
  }
  return absl::InternalError("no feasible transport found");
}

}  // namespace pufferfish
