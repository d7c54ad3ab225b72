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

#include "pufferfish/mixing.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <variant>

#include <Eigen/LU>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace pufferfish {
namespace {

constexpr double kJacobiTolerance = 1e-12;
constexpr int kJacobiSweeps = 100;
constexpr double kStationaryResidual = 1e-10;

absl::Status NoMix() {
  return absl::FailedPreconditionError(
      "chain does not mix (reducible or periodic)");
}

struct ChainMixing {
  Vector pi;
  double g = 0.0;
};

absl::StatusOr<ChainMixing> MixingOf(const TransitionMatrix& p, GapMode mode) {
  absl::StatusOr<Vector> pi = StationaryDistribution(p);
  if (!pi.ok()) return pi.status();
  absl::StatusOr<double> g = Eigengap(p, mode);
  if (!g.ok()) return g.status();
  return ChainMixing{*std::move(pi), *g};
}

}  // namespace

bool IsPrimitive(const TransitionMatrix& p) {
  const int k = p.states();
  using BoolMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
  BoolMatrix b = (p.matrix().array() > 0.0).cast<int>();
  // Primitive matrices have a positive power at (k-1)^2 + 1 and beyond.
  const long need = static_cast<long>(k - 1) * (k - 1) + 1;
  for (long m = 1;; m *= 2) {
    if (m >= need) return (b.array() > 0).all();
    BoolMatrix sq = b * b;
    b = (sq.array() > 0).cast<int>();
  }
}

absl::StatusOr<Vector> StationaryDistribution(const TransitionMatrix& p) {
  if (!IsPrimitive(p)) return NoMix();
  const int k = p.states();
  Matrix a = p.matrix().transpose() - Matrix::Identity(k, k);
  a.row(k - 1).setOnes();
  Vector rhs = Vector::Zero(k);
  rhs(k - 1) = 1.0;
  Vector pi = a.fullPivLu().solve(rhs);
  pi = pi.cwiseMax(0.0);
  pi /= pi.sum();
  const double residual =
      (pi.transpose() * p.matrix() - pi.transpose()).cwiseAbs().sum();
  if (residual > kStationaryResidual || pi.minCoeff() <= 0.0) {
    return absl::InternalError(absl::StrFormat(
        "stationary solve failed (residual %g)", residual));
  }
  return pi;
}

absl::StatusOr<TransitionMatrix> TimeReversal(const TransitionMatrix& p,
                                              const Vector& pi) {
  const int k = p.states();
  if (pi.size() != k || pi.minCoeff() <= 0.0) {
    return absl::InvalidArgumentError(
        "time reversal needs a strictly positive stationary distribution");
  }
  Matrix r(k, k);
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) r(x, y) = pi(y) * p(y, x) / pi(x);
  }
  for (int x = 0; x < k; ++x) {
    const double sum = r.row(x).sum();
    if (std::abs(sum - 1.0) > kProductTolerance) {
      return absl::InvalidArgumentError("pi is not stationary for P");
    }
    r.row(x) /= sum;
  }
  return TransitionMatrix::Create(std::move(r));
}

bool IsReversible(const TransitionMatrix& p, const Vector& pi) {
  const int k = p.states();
  for (int x = 0; x < k; ++x) {
    for (int y = x + 1; y < k; ++y) {
      if (std::abs(pi(x) * p(x, y) - pi(y) * p(y, x)) > kReversibleTolerance) {
        return false;
      }
    }
  }
  return true;
}

absl::StatusOr<std::vector<double>> SymmetricEigenvalues(Matrix s) {
  const int n = static_cast<int>(s.rows());
  if (s.cols() != n) return absl::InvalidArgumentError("matrix not square");
  auto off = [&] {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) sum += s(i, j) * s(i, j);
      }
    }
    return std::sqrt(sum);
  };
  int sweep = 0;
  for (; sweep < kJacobiSweeps && off() > kJacobiTolerance; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(s(p, q)) < 1e-300) continue;
        const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double skp = s(k, p), skq = s(k, q);
          s(k, p) = c * skp - sn * skq;
          s(k, q) = sn * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          const double spk = s(p, k), sqk = s(q, k);
          s(p, k) = c * spk - sn * sqk;
          s(q, k) = sn * spk + c * sqk;
        }
      }
    }
  }
  if (off() > kJacobiTolerance) {
    return absl::InternalError("Jacobi eigensolver did not converge");
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = s(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

absl::StatusOr<double> Eigengap(const TransitionMatrix& p, GapMode mode) {
  absl::StatusOr<Vector> pi = StationaryDistribution(p);
  if (!pi.ok()) return pi.status();
  const Vector root = pi->cwiseSqrt();
  const Vector inv_root = root.cwiseInverse();
  // A = Pi^{1/2} P Pi^{-1/2}; A A^T is similar to P P*, and A itself is
  // symmetric exactly when P is reversible.
  const Matrix a = root.asDiagonal() * p.matrix() * inv_root.asDiagonal();
  Matrix s;
  double factor = 1.0;
  if (mode == GapMode::kReversible) {
    if (!IsReversible(p, *pi)) {
      return absl::FailedPreconditionError(
          "reversible eigengap requested for a non-reversible chain");
    }
    s = 0.5 * (a + a.transpose());
    factor = 2.0;
  } else {
    s = a * a.transpose();
    s = 0.5 * (s + s.transpose());
  }
  absl::StatusOr<std::vector<double>> ev = SymmetricEigenvalues(std::move(s));
  if (!ev.ok()) return ev.status();
  // The leading eigenvalue is the unit eigenvalue of the stationary vector.
  double second = 0.0;
  for (size_t j = 1; j < ev->size(); ++j) {
    second = std::max(second, std::abs((*ev)[j]));
  }
  const double g = factor * (1.0 - second);
  if (!(g > 1e-12)) {
    return absl::FailedPreconditionError("eigengap is zero; chain does not mix");
  }
  return std::min(g, 2.0);
}

absl::StatusOr<MixingSummary> ComputeMixingSummary(const DistributionClass& cls,
                                                   GapMode mode) {
  MixingSummary out;
  out.mode = mode;
  out.states = cls.states();
  out.length = cls.length();
  out.pi_min = std::numeric_limits<double>::infinity();
  out.g = std::numeric_limits<double>::infinity();
  auto absorb = [&](const TransitionMatrix& p) -> absl::Status {
    absl::StatusOr<ChainMixing> m = MixingOf(p, mode);
    if (!m.ok()) return m.status();
    out.pi_min = std::min(out.pi_min, m->pi.minCoeff());
    out.g = std::min(out.g, m->g);
    out.pi.push_back(std::move(m->pi));
    return absl::OkStatus();
  };
  const ClassVariant& v = cls.value();
  if (const auto* fs = std::get_if<FiniteSet>(&v)) {
    for (const auto& c : fs->chains) {
      if (absl::Status s = absorb(c.transition()); !s.ok()) return s;
    }
  } else if (const auto* ms = std::get_if<MatrixSetAllInits>(&v)) {
    for (const auto& p : ms->matrices) {
      if (absl::Status s = absorb(p); !s.ok()) return s;
    }
  } else if (const auto* bi = std::get_if<BinaryInterval>(&v)) {
    std::vector<double> grid = GridPoints(bi->alpha, bi->beta, bi->grid_step);
    for (double p0 : grid) {
      for (double p1 : grid) {
        const double denom = 2.0 - p0 - p1;
        const double pi0 = (1.0 - p1) / denom;
        const double pi1 = (1.0 - p0) / denom;
        const double lambda = p0 + p1 - 1.0;
        const double g = mode == GapMode::kReversible
                             ? 2.0 * (1.0 - std::abs(lambda))
                             : 1.0 - lambda * lambda;
        out.pi_min = std::min({out.pi_min, pi0, pi1});
        out.g = std::min(out.g, g);
      }
    }
  } else {
    const auto& mp = std::get<MixingParams>(v);
    out.pi_min = mp.pi_min;
    out.g = mp.g;
    out.mode = mp.reversible ? GapMode::kReversible : GapMode::kPPStar;
  }
  return out;
}

}  // namespace pufferfish
