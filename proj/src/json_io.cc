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

#include "pufferfish/json_io.h"

#include <cmath>
#include <fstream>
#include <variant>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pufferfish/composition.h"

namespace pufferfish {
namespace {

Json VectorJson(const Vector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json MatrixJson(const Matrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Vector VectorFrom(const Json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Vector>(v.data(), static_cast<long>(v.size()));
}

absl::StatusOr<Matrix> MatrixFrom(const Json& j) {
  const auto rows = j.get<std::vector<std::vector<double>>>();
  if (rows.empty()) return absl::InvalidArgumentError("empty matrix");
  Matrix m(rows.size(), rows.front().size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) {
      return absl::InvalidArgumentError("ragged matrix rows");
    }
    for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

const char* ShapeName(QuiltShape s) {
  switch (s) {
    case QuiltShape::kTrivial:
      return "trivial";
    case QuiltShape::kLeft:
      return "left";
    case QuiltShape::kRight:
      return "right";
    case QuiltShape::kPair:
      return "pair";
  }
  return "trivial";
}

absl::StatusOr<DistributionClass> ParseClass(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  const int t = j.at("T").get<int>();
  if (type == "finite_set") {
    FiniteSet fs;
    for (const Json& c : j.at("chains")) {
      absl::StatusOr<Matrix> p = MatrixFrom(c.at("P"));
      if (!p.ok()) return p.status();
      absl::StatusOr<MarkovChainModel> m =
          MarkovChainModel::Create(ChainSpec{VectorFrom(c.at("q")), *p, t});
      if (!m.ok()) return m.status();
      fs.chains.push_back(*std::move(m));
    }
    return DistributionClass::Create(std::move(fs));
  }
  if (type == "matrix_set_all_inits") {
    MatrixSetAllInits ms;
    ms.length = t;
    for (const Json& pj : j.at("matrices")) {
      absl::StatusOr<Matrix> p = MatrixFrom(pj);
      if (!p.ok()) return p.status();
      absl::StatusOr<TransitionMatrix> tm = TransitionMatrix::Create(*p);
      if (!tm.ok()) return tm.status();
      ms.matrices.push_back(*std::move(tm));
    }
    return DistributionClass::Create(std::move(ms));
  }
  if (type == "binary_interval") {
    BinaryInterval b;
    b.alpha = j.at("alpha").get<double>();
    b.beta = j.at("beta").get<double>();
    b.grid_step = j.value("grid_step", 0.01);
    b.length = t;
    return DistributionClass::Create(b);
  }
  if (type == "mixing_params") {
    MixingParams m;
    m.pi_min = j.at("pi_min").get<double>();
    m.g = j.at("g").get<double>();
    m.states = j.value("k", 2);
    m.reversible = j.value("reversible", false);
    m.length = t;
    return DistributionClass::Create(m);
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown class type ", type));
}

}  // namespace

absl::StatusOr<DistributionClass> ClassFromJson(const Json& j) {
  try {
    return ParseClass(j);
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("class spec: ", e.what()));
  }
}

Json ClassToJson(const DistributionClass& cls) {
  const ClassVariant& v = cls.value();
  Json j;
  j["T"] = cls.length();
  if (const auto* fs = std::get_if<FiniteSet>(&v)) {
    j["type"] = "finite_set";
    j["chains"] = Json::array();
    for (const auto& c : fs->chains) {
      j["chains"].push_back(
          {{"q", VectorJson(c.initial())}, {"P", MatrixJson(c.transition().matrix())}});
    }
  } else if (const auto* ms = std::get_if<MatrixSetAllInits>(&v)) {
    j["type"] = "matrix_set_all_inits";
    j["matrices"] = Json::array();
    for (const auto& p : ms->matrices) j["matrices"].push_back(MatrixJson(p.matrix()));
  } else if (const auto* b = std::get_if<BinaryInterval>(&v)) {
    j["type"] = "binary_interval";
    j["alpha"] = b->alpha;
    j["beta"] = b->beta;
    j["grid_step"] = b->grid_step;
  } else {
    const auto& m = std::get<MixingParams>(v);
    j["type"] = "mixing_params";
    j["pi_min"] = m.pi_min;
    j["g"] = m.g;
    j["k"] = m.states;
    j["reversible"] = m.reversible;
  }
  return j;
}

std::string ClassFingerprint(const DistributionClass& cls) {
  return Sha256Hex(ClassToJson(cls).dump());
}

absl::StatusOr<std::vector<JointModel>> JointModelsFromJson(const Json& j) {
  try {
    std::vector<Json> items;
    if (j.is_array()) {
      items = j.get<std::vector<Json>>();
    } else if (j.contains("models")) {
      items = j.at("models").get<std::vector<Json>>();
    } else {
      items.push_back(j);
    }
    std::vector<JointModel> out;
    for (const Json& m : items) {
      absl::StatusOr<JointModel> jm =
          JointModel::Create(m.at("n").get<int>(), m.at("domain").get<int>(),
                             m.at("probs").get<std::vector<double>>());
      if (!jm.ok()) return jm.status();
      out.push_back(*std::move(jm));
    }
    if (out.empty()) return absl::InvalidArgumentError("no joint models");
    return out;
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("joint model: ", e.what()));
  }
}

Json Number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Json QuiltToJson(const MarkovQuilt& q) {
  return {{"shape", ShapeName(q.shape)},
          {"a", q.a},
          {"b", q.b},
          {"nodes", q.QuiltNodes()},
          {"label", q.ToString()},
          {"nearby_size", q.NearbySize()}};
}

Json PlanToJson(const NoisePlan& plan) {
  Json j;
  j["mechanism"] = plan.mechanism;
  j["epsilon"] = Number(plan.epsilon);
  j["lipschitz"] = Number(plan.lipschitz);
  j["sigma_max"] = Number(plan.sigma_max);
  j["laplace_scale"] = Number(plan.laplace_scale);
  if (plan.length > 0) j["T"] = plan.length;
  if (plan.ell > 0) j["ell"] = plan.ell;
  if (plan.wasserstein_w) j["wasserstein_w"] = Number(*plan.wasserstein_w);
  if (plan.a_star) j["a_star"] = *plan.a_star;
  j["fallback"] = plan.fallback;
  if (plan.skipped_pairs > 0) j["skipped_pairs"] = plan.skipped_pairs;
  if (!plan.per_node.empty()) {
    Json nodes = Json::array();
    for (const NodeResult& r : plan.per_node) {
      Json n{{"node", r.node},
             {"quilt", QuiltToJson(r.quilt)},
             {"influence", Number(r.influence)},
             {"sigma", Number(r.sigma)}};
      if (r.theta >= 0) n["theta"] = r.theta;
      nodes.push_back(std::move(n));
    }
    j["per_node"] = std::move(nodes);
  }
  if (!plan.per_theta.empty()) {
    Json thetas = Json::array();
    for (const ThetaSummary& t : plan.per_theta) {
      thetas.push_back({{"theta", t.theta},
                        {"sigma_max", Number(t.sigma_max)},
                        {"node", t.node},
                        {"quilt", QuiltToJson(t.quilt)},
                        {"influence", Number(t.influence)}});
    }
    j["per_theta"] = std::move(thetas);
  }
  if (!plan.notes.empty()) j["notes"] = plan.notes;
  return j;
}

Json ReleaseToJson(const PrivateRelease& release) {
  return {{"answer", release.value}, {"plan", PlanToJson(release.plan)}};
}

Json SummaryToJson(const MixingSummary& s) {
  Json pis = Json::array();
  for (const Vector& pi : s.pi) pis.push_back(VectorJson(pi));
  return {{"pi", pis},
          {"pi_min", Number(s.pi_min)},
          {"g", Number(s.g)},
          {"gap_mode", s.mode == GapMode::kReversible ? "reversible" : "pp_star"},
          {"k", s.states},
          {"T", s.length}};
}

Json DistributionToJson(const DiscreteDistribution& d) {
  Json out = Json::array();
  for (const Atom& a : d.atoms()) out.push_back({a.value, a.prob});
  return out;
}

Json EstimateToJson(const TransitionEstimate& est,
                    const DiscretizedSeries& series) {
  Json j;
  j["type"] = "finite_set";
  j["T"] = series.segmentation.longest();
  j["chains"] = Json::array(
      {{{"q", VectorJson(est.q)}, {"P", MatrixJson(est.p.matrix())}}});
  j["k"] = series.k;
  j["segment_lengths"] = series.segmentation.Lengths();
  j["clamped_low"] = series.clamped_low;
  j["clamped_high"] = series.clamped_high;
  j["transition_counts"] = MatrixJson(est.counts);
  return j;
}

absl::StatusOr<Json> ReadJsonFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": ", e.what()));
  }
}

}  // namespace pufferfish
