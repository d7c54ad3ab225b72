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

#include "pufferfish/markov_chain.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"

namespace pufferfish {
namespace {

void CheckStochasticRows(const Matrix& p, const std::string& name,
                         std::vector<Violation>& out) {
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p.cols(); ++c) {
      const double v = p(r, c);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        out.push_back({absl::StrFormat("%s[%d][%d] = %g is outside [0,1]",
                                       name, r, c, v),
                       r, c});
      }
    }
    const double sum = p.row(r).sum();
    if (std::abs(sum - 1.0) > kSimplexTolerance) {
      out.push_back(
          {absl::StrFormat("%s row %d sums to %.15g", name, r, sum), r, -1});
    }
  }
}

}  // namespace

std::string ValidationReport::ToString() const {
  if (ok()) return "ok";
  std::vector<std::string> lines;
  lines.reserve(violations.size());
  for (const Violation& v : violations) lines.push_back(v.message);
  return absl::StrJoin(lines, "; ");
}

ValidationReport ValidateChain(const ChainSpec& spec) {
  ValidationReport report;
  auto& out = report.violations;
  const Matrix& p = spec.transition;
  if (p.rows() != p.cols()) {
    out.push_back({absl::StrFormat("P is %dx%d, not square", p.rows(),
                                   p.cols())});
  } else if (p.rows() < 2) {
    out.push_back({absl::StrFormat("P has %d states; need at least 2",
                                   p.rows())});
  }
  if (spec.initial.size() != p.rows()) {
    out.push_back({absl::StrFormat("q has length %d but P has %d rows",
                                   spec.initial.size(), p.rows())});
  }
  if (spec.length < 1) {
    out.push_back({absl::StrFormat("chain length %d < 1", spec.length)});
  }
  for (int i = 0; i < spec.initial.size(); ++i) {
    const double v = spec.initial(i);
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      out.push_back(
          {absl::StrFormat("q[%d] = %g is outside [0,1]", i, v), i, -1});
    }
  }
  if (spec.initial.size() > 0) {
    const double sum = spec.initial.sum();
    if (std::abs(sum - 1.0) > kSimplexTolerance) {
      out.push_back({absl::StrFormat("q sums to %.15g", sum)});
    }
  }
  if (p.rows() == p.cols()) CheckStochasticRows(p, "P", out);
  return report;
}

absl::StatusOr<TransitionMatrix> TransitionMatrix::Create(Matrix rows) {
  std::vector<Violation> violations;
  if (rows.rows() != rows.cols() || rows.rows() < 2) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "transition matrix must be square with >= 2 states, got %dx%d",
        rows.rows(), rows.cols()));
  }
  CheckStochasticRows(rows, "P", violations);
  if (!violations.empty()) {
    return absl::InvalidArgumentError(
        ValidationReport{std::move(violations)}.ToString());
  }
  return TransitionMatrix(std::move(rows));
}

absl::StatusOr<TransitionMatrix> TransitionMatrix::CreateRenormalized(
    Matrix rows) {
  for (int r = 0; r < rows.rows(); ++r) {
    if ((rows.row(r).array() < 0.0).any()) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", r, " has a negative entry"));
    }
    const double sum = rows.row(r).sum();
    if (!(sum > 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", r, " has no mass to renormalize"));
    }
    rows.row(r) /= sum;
  }
  return Create(std::move(rows));
}

absl::StatusOr<MarkovChainModel> MarkovChainModel::Create(
    const ChainSpec& spec) {
  ValidationReport report = ValidateChain(spec);
  if (!report.ok()) return absl::InvalidArgumentError(report.ToString());
  absl::StatusOr<TransitionMatrix> p = TransitionMatrix::Create(spec.transition);
  if (!p.ok()) return p.status();
  return MarkovChainModel(spec.initial, *std::move(p), spec.length);
}

absl::StatusOr<MarkovChainModel> MarkovChainModel::Create(
    Vector initial, TransitionMatrix transition, int length) {
  return Create(ChainSpec{std::move(initial), transition.matrix(), length});
}

MarkovChainModel MarkovChainModel::WithLength(int length) const {
  return MarkovChainModel(initial_, transition_, length);
}

absl::StatusOr<std::vector<Matrix>> MatrixPowers(const TransitionMatrix& p,
                                                 int max_power) {
  const int k = p.states();
  std::vector<Matrix> powers;
  powers.reserve(static_cast<size_t>(std::max(max_power, 0)) + 1);
  powers.push_back(Matrix::Identity(k, k));
  for (int t = 1; t <= max_power; ++t) {
    powers.push_back(powers.back() * p.matrix());
    const Vector sums = powers.back().rowwise().sum();
    if ((sums.array() - 1.0).abs().maxCoeff() > kProductTolerance) {
      return absl::InternalError(
          absl::StrCat("P^", t, " drifted from row-stochastic"));
    }
  }
  return powers;
}

}  // namespace pufferfish
