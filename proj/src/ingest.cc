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

#include "pufferfish/ingest.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "pufferfish/mixing.h"

namespace pufferfish {
namespace {

std::vector<std::string> SplitRow(const std::string& line) {
  std::vector<std::string> cells = absl::StrSplit(line, ',');
  for (std::string& c : cells) {
    absl::string_view v = absl::StripAsciiWhitespace(c);
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
      v = v.substr(1, v.size() - 2);
    }
    c = std::string(v);
  }
  return cells;
}

int Column(const std::vector<std::string>& header, const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

}  // namespace

absl::StatusOr<RawSeries> ParseCsv(const std::string& text,
                                   const CsvSchema& schema) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || absl::StripAsciiWhitespace(line).empty()) {
    return absl::InvalidArgumentError("empty file: a header row is required");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = SplitRow(line);
  const int tcol = Column(header, schema.timestamp_col);
  const int vcol = Column(header, schema.value_col);
  if (tcol < 0 || vcol < 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "header must name columns '", schema.timestamp_col, "' and '",
        schema.value_col, "'"));
  }
  RawSeries out;
  int row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    ++row;
    const std::vector<std::string> cells = SplitRow(line);
    auto cell = [&](int col) -> std::string {
      return col < static_cast<int>(cells.size()) ? cells[col] : std::string();
    };
    const std::string ts = cell(tcol);
    const std::string val = cell(vcol);
    if (ts.empty()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "row %d: missing value in column '%s'", row, schema.timestamp_col));
    }
    if (val.empty()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "row %d: missing value in column '%s'", row, schema.value_col));
    }
    double t = 0.0;
    if (!absl::SimpleAtod(ts, &t) || !std::isfinite(t)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("row %d: timestamp '%s' is not numeric", row, ts));
    }
    if (!out.timestamps.empty() && t < out.timestamps.back()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "row %d: timestamp %g is earlier than the previous row", row, t));
    }
    out.timestamps.push_back(t);
    out.values.push_back(val);
  }
  return out;
}

absl::StatusOr<RawSeries> LoadCsv(const std::string& path,
                                  const CsvSchema& schema) {
  std::ifstream f(path);
  if (!f) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream ss;
  ss << f.rdbuf();
  return ParseCsv(ss.str(), schema);
}

absl::StatusOr<DiscretizedSeries> Discretize(const RawSeries& series,
                                             const DiscretizeSpec& spec) {
  if (series.size() == 0) return absl::InvalidArgumentError("empty series");
  DiscretizedSeries out;
  if (!spec.labels.empty()) {
    out.k = static_cast<int>(spec.labels.size());
    for (int r = 0; r < series.size(); ++r) {
      auto it = std::find(spec.labels.begin(), spec.labels.end(),
                          series.values[r]);
      if (it == spec.labels.end()) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "row %d: label '%s' is not mapped", r + 1, series.values[r]));
      }
      out.states.push_back(static_cast<int>(it - spec.labels.begin()));
    }
  } else {
    if (!(spec.width > 0.0)) {
      return absl::InvalidArgumentError("bin width must be positive");
    }
    std::vector<long> bins;
    for (int r = 0; r < series.size(); ++r) {
      double v = 0.0;
      if (!absl::SimpleAtod(series.values[r], &v) || !std::isfinite(v)) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "row %d: value '%s' is not numeric", r + 1, series.values[r]));
      }
      bins.push_back(static_cast<long>(std::floor((v - spec.origin) / spec.width)));
    }
    long k = spec.states;
    if (k <= 0) k = std::max(1L, *std::max_element(bins.begin(), bins.end()) + 1);
    out.k = static_cast<int>(k);
    for (long b : bins) {
      if (b < 0) {
        ++out.clamped_low;
        b = 0;
      } else if (b >= k) {
        ++out.clamped_high;
        b = k - 1;
      }
      out.states.push_back(static_cast<int>(b));
    }
  }
  std::vector<std::pair<int, int>> segs;
  int start = 0;
  for (int r = 1; r < series.size(); ++r) {
    if (series.timestamps[r] - series.timestamps[r - 1] > spec.gap_threshold) {
      segs.push_back({start, r});
      start = r;
    }
  }
  segs.push_back({start, series.size()});
  out.segmentation = ChainSegmentation{std::move(segs)};
  return out;
}

absl::StatusOr<TransitionEstimate> EstimateTransition(
    const DiscretizedSeries& series, double smoothing, bool stationary_initial) {
  if (series.states.empty()) return absl::InvalidArgumentError("empty series");
  if (!(smoothing >= 0.0)) {
    return absl::InvalidArgumentError("smoothing must be non-negative");
  }
  const int k = series.k;
  if (k < 2) return absl::InvalidArgumentError("need at least two states");
  Matrix counts = Matrix::Zero(k, k);
  Vector starts = Vector::Zero(k);
  for (const auto& [s, e] : series.segmentation.segments) {
    starts(series.states[s]) += 1.0;
    for (int j = s + 1; j < e; ++j) {
      counts(series.states[j - 1], series.states[j]) += 1.0;
    }
  }
  Matrix p = counts.array() + smoothing;
  for (int x = 0; x < k; ++x) {
    const double row = p.row(x).sum();
    if (!(row > 0.0)) {
      return absl::FailedPreconditionError(absl::StrFormat(
          "state %d has no observed transitions; use smoothing > 0", x + 1));
    }
    p.row(x) /= row;
  }
  absl::StatusOr<TransitionMatrix> tm = TransitionMatrix::CreateRenormalized(p);
  if (!tm.ok()) return tm.status();
  Vector q = starts / starts.sum();
  if (stationary_initial) {
    absl::StatusOr<Vector> pi = StationaryDistribution(*tm);
    if (!pi.ok()) return pi.status();
    q = *pi;
  }
  return TransitionEstimate{*std::move(tm), std::move(q), std::move(counts)};
}

std::vector<int> Synthesize(const MarkovChainModel& model, LaplaceSource& rng) {
  const int k = model.states();
  auto draw = [&](auto&& prob) {
    const double u = rng.NextUniform();
    double acc = 0.0;
    int last = 0;
    for (int x = 0; x < k; ++x) {
      if (prob(x) <= 0.0) continue;
      last = x;
      acc += prob(x);
      if (u < acc) return x;
    }
    return last;
  };
  std::vector<int> seq(model.length());
  const Vector& q = model.initial();
  const Matrix& p = model.transition().matrix();
  seq[0] = draw([&](int x) { return q(x); });
  for (int j = 1; j < model.length(); ++j) {
    const int prev = seq[j - 1];
    seq[j] = draw([&](int x) { return p(prev, x); });
  }
  return seq;
}

}  // namespace pufferfish
