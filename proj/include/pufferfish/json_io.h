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

#ifndef PUFFERFISH_JSON_IO_H_
#define PUFFERFISH_JSON_IO_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "pufferfish/discrete_distribution.h"
#include "pufferfish/distribution_class.h"
#include "pufferfish/ingest.h"
#include "pufferfish/joint_model.h"
#include "pufferfish/mixing.h"
#include "pufferfish/noise_plan.h"

namespace pufferfish {

using Json = nlohmann::json;

// Class documents:
//   {"type":"finite_set","T":100,"chains":[{"q":[...],"P":[[...],...]}]}
//   {"type":"matrix_set_all_inits","T":100,"matrices":[[[...],...],...]}
//   {"type":"binary_interval","T":100,"alpha":0.1,"beta":0.9,"grid_step":0.01}
//   {"type":"mixing_params","T":100,"pi_min":0.2,"g":0.75,"k":2,
//    "reversible":false}
absl::StatusOr<DistributionClass> ClassFromJson(const Json& j);
Json ClassToJson(const DistributionClass& cls);
std::string ClassFingerprint(const DistributionClass& cls);

// {"n":4,"domain":2,"probs":[...]}, a list of such objects, or
// {"models":[...]}.
absl::StatusOr<std::vector<JointModel>> JointModelsFromJson(const Json& j);

// Non-finite numbers are written as the strings "inf" / "-inf".
Json Number(double v);
Json QuiltToJson(const MarkovQuilt& q);
Json PlanToJson(const NoisePlan& plan);
Json ReleaseToJson(const PrivateRelease& release);
Json SummaryToJson(const MixingSummary& summary);
Json DistributionToJson(const DiscreteDistribution& d);
// A finite-set class document for the estimated chain plus ingestion facts
// (1-based states).
Json EstimateToJson(const TransitionEstimate& est,
                    const DiscretizedSeries& series);

absl::StatusOr<Json> ReadJsonFile(const std::string& path);

}  // namespace pufferfish

#endif  // PUFFERFISH_JSON_IO_H_
