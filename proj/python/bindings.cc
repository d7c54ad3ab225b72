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

// Python bindings. Documents cross the boundary as JSON-compatible dicts and
// chain states are 1-based on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "pufferfish/discrete_distribution.h"
#include "pufferfish/joint_model.h"
#include "pufferfish/json_io.h"
#include "pufferfish/laplace.h"
#include "pufferfish/mixing.h"
#include "pufferfish/planner.h"
#include "pufferfish/query.h"
#include "pufferfish/w_infinity.h"

namespace py = pybind11;

namespace pufferfish {
namespace {

void Check(const absl::Status& s) {
  if (!s.ok()) throw py::value_error(std::string(s.message()));
}

template <typename T>
T Unwrap(absl::StatusOr<T> v) {
  Check(v.status());
  return *std::move(v);
}

Json ToJson(const py::object& obj) {
  py::module_ json = py::module_::import("json");
  return Json::parse(json.attr("dumps")(obj).cast<std::string>());
}

py::object FromJson(const Json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

DiscreteDistribution ToDistribution(
    const std::vector<std::pair<double, double>>& atoms) {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const auto& [value, prob] : atoms) out.push_back({value, prob});
  return Unwrap(DiscreteDistribution::Create(std::move(out)));
}

TransitionMatrix ToTransition(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw py::value_error("empty matrix");
  Matrix m(rows.size(), rows.front().size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) {
      throw py::value_error("ragged matrix rows");
    }
    for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return Unwrap(TransitionMatrix::Create(std::move(m)));
}

py::object Scale(const py::object& config, double epsilon,
                 const std::string& mechanism, const std::string& query,
                 int ell, const std::string& gap_mode) {
  const Json j = ToJson(config);
  if (mechanism == "wasserstein") {
    std::vector<JointModel> models = Unwrap(JointModelsFromJson(j));
    LipschitzQuery q = Unwrap(
        BuiltinQuery(query, models.front().n(), models.front().domain()));
    return FromJson(PlanToJson(Unwrap(WassersteinPlan(models, q, epsilon))));
  }
  DistributionClass cls = Unwrap(ClassFromJson(j));
  LipschitzQuery q = Unwrap(BuiltinQuery(query, cls.length(), cls.states()));
  PlanOutcome out = Unwrap(PlanForClass(
      cls, q,
      PlanRequest{mechanism, epsilon, ell, Unwrap(ParseGapMode(gap_mode)), {}, 0}));
  Json plan = PlanToJson(out.plan);
  if (out.summary) plan["mixing_summary"] = SummaryToJson(*out.summary);
  return FromJson(plan);
}

py::object PrivatizeChain(const py::object& config,
                          const std::vector<int>& states, double epsilon,
                          uint64_t seed, const std::string& mechanism,
                          const std::string& query, int ell,
                          std::vector<int> lengths,
                          const std::string& gap_mode) {
  DistributionClass cls = Unwrap(ClassFromJson(ToJson(config)));
  std::vector<int> data;
  data.reserve(states.size());
  for (int s : states) {
    if (s < 1 || s > cls.states()) throw py::value_error("state out of range");
    data.push_back(s - 1);
  }
  if (lengths.empty()) lengths.push_back(static_cast<int>(data.size()));
  LipschitzQuery q =
      Unwrap(BuiltinQuery(query, static_cast<int>(data.size()), cls.states()));
  PlanOutcome out = Unwrap(PlanForClass(
      cls, q,
      PlanRequest{mechanism, epsilon, ell, Unwrap(ParseGapMode(gap_mode)),
                  std::move(lengths), 0}));
  LaplaceSource src(seed);
  return FromJson(ReleaseToJson(Unwrap(Privatize(out.plan, q, data, src))));
}

}  // namespace
}  // namespace pufferfish

PYBIND11_MODULE(_pufferfish, m) {
  using namespace pufferfish;
  m.doc() = "Pufferfish privacy mechanisms for correlated data";

  m.def("scale", &Scale, py::arg("config"), py::arg("epsilon"),
        py::arg("mechanism") = "mqm_exact",
        py::arg("query") = "rel_freq_histogram", py::arg("ell") = 0,
        py::arg("gap_mode") = "pp_star",
        "Noise plan for a class document (or joint models for wasserstein).");
  m.def("privatize", &PrivatizeChain, py::arg("config"), py::arg("states"),
        py::arg("epsilon"), py::arg("seed"), py::arg("mechanism") = "mqm_exact",
        py::arg("query") = "rel_freq_histogram", py::arg("ell") = 0,
        py::arg("lengths") = std::vector<int>{},
        py::arg("gap_mode") = "pp_star");

  m.def("max_divergence",
        [](const std::vector<std::pair<double, double>>& p,
           const std::vector<std::pair<double, double>>& q) {
          return MaxDivergence(ToDistribution(p), ToDistribution(q));
        });
  m.def("w_infinity",
        [](const std::vector<std::pair<double, double>>& p,
           const std::vector<std::pair<double, double>>& q) {
          return WInfinity(ToDistribution(p), ToDistribution(q));
        });
  m.def("stationary_distribution",
        [](const std::vector<std::vector<double>>& p) {
          Vector pi = Unwrap(StationaryDistribution(ToTransition(p)));
          return std::vector<double>(pi.data(), pi.data() + pi.size());
        });
  m.def(
      "eigengap",
      [](const std::vector<std::vector<double>>& p, const std::string& mode) {
        return Unwrap(Eigengap(ToTransition(p), Unwrap(ParseGapMode(mode))));
      },
      py::arg("p"), py::arg("mode") = "pp_star");
  m.def("laplace", [](uint64_t seed, double scale, int n) {
    LaplaceSource src(seed);
    return Unwrap(src.Sample(scale, n));
  });
}
