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

#ifndef PUFFERFISH_COMPOSITION_H_
#define PUFFERFISH_COMPOSITION_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pufferfish/markov_quilt.h"
#include "pufferfish/noise_plan.h"

namespace pufferfish {

// Identifies the per-node quilt sets shared by every composed release: the
// chain length, the extent bound and a fingerprint of the distribution class.
struct QuiltSetKey {
  int length = 0;
  int ell = 0;
  std::string class_fingerprint;

  friend bool operator==(const QuiltSetKey&, const QuiltSetKey&) = default;
};

struct LedgerEntry {
  std::string query;
  double epsilon = 0.0;
  // Active (minimum-score) quilt per node, 1..T.
  std::vector<MarkovQuilt> active;
  std::string prev_hash;
  std::string hash;
};

// Sequential composition of quilt-mechanism releases that share quilt sets.
// K releases at levels eps_1..eps_K cost K * max_k eps_k. Entries are chained
// by SHA-256 so an edited ledger is detected on load.
class CompositionLedger {
 public:
  explicit CompositionLedger(QuiltSetKey key) : key_(std::move(key)) {}

  const QuiltSetKey& key() const { return key_; }
  const std::vector<LedgerEntry>& entries() const { return entries_; }
  double total() const;

  // Records one release. Fails with "composition guarantee void" when the
  // quilt sets differ from the ledger's, or when an earlier release at the
  // same epsilon used different active quilts.
  absl::Status Compose(const QuiltSetKey& key, const std::string& query,
                       double epsilon, const std::vector<MarkovQuilt>& active);
  absl::Status Compose(const QuiltSetKey& key, const std::string& query,
                       const NoisePlan& plan);

  // JSON-lines: a header line, then one line per entry.
  std::string HeaderLine() const;
  std::string EntryLine(const LedgerEntry& e) const;
  static absl::StatusOr<CompositionLedger> Parse(const std::string& text);
  static absl::StatusOr<CompositionLedger> Load(const std::string& path);
  // Creates the file with a header if absent, then appends the entries not
  // yet on disk. Refuses if the file on disk fails verification.
  absl::Status Save(const std::string& path) const;

 private:
  QuiltSetKey key_;
  std::vector<LedgerEntry> entries_;
};

std::string Sha256Hex(const std::string& data);

}  // namespace pufferfish

#endif  // PUFFERFISH_COMPOSITION_H_
