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

#ifndef PUFFERFISH_INGEST_H_
#define PUFFERFISH_INGEST_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "pufferfish/baselines.h"
#include "pufferfish/laplace.h"
#include "pufferfish/markov_chain.h"

namespace pufferfish {

struct RawSeries {
  std::vector<double> timestamps;  // seconds
  std::vector<std::string> values;
  int size() const { return static_cast<int>(timestamps.size()); }
};

struct CsvSchema {
  std::string timestamp_col = "timestamp";
  std::string value_col = "value";
};

// CSV with a header row. Errors name the 1-based data row.
absl::StatusOr<RawSeries> ParseCsv(const std::string& text,
                                   const CsvSchema& schema = {});
absl::StatusOr<RawSeries> LoadCsv(const std::string& path,
                                  const CsvSchema& schema = {});

struct DiscretizeSpec {
  // Numeric binning: state floor((v - origin) / width) + 1, clamped to 1..k.
  double width = 200.0;
  double origin = 0.0;
  // Number of numeric states; 0 takes the largest observed bin.
  int states = 0;
  // Categorical labels in state order. Non-empty selects label mapping.
  std::vector<std::string> labels;
  // A gap larger than this starts a new chain.
  double gap_threshold = 600.0;
};

struct DiscretizedSeries {
  // 0-based states; reported 1-based at the edges.
  std::vector<int> states;
  int k = 0;
  ChainSegmentation segmentation;
  int clamped_low = 0;
  int clamped_high = 0;
};

absl::StatusOr<DiscretizedSeries> Discretize(const RawSeries& series,
                                             const DiscretizeSpec& spec);

struct TransitionEstimate {
  TransitionMatrix p;
  Vector q;
  Matrix counts;
};

// P(x, y) = (n(x -> y) + s) / (n(x -> .) + k s) with transitions counted
// inside segments only. q is the distribution of segment starts, or the
// stationary distribution of the estimate when `stationary_initial` is set.
absl::StatusOr<TransitionEstimate> EstimateTransition(
    const DiscretizedSeries& series, double smoothing = 1.0,
    bool stationary_initial = false);

// One chain of the model's length.
std::vector<int> Synthesize(const MarkovChainModel& model, LaplaceSource& rng);

}  // namespace pufferfish

#endif  // PUFFERFISH_INGEST_H_
