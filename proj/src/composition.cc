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

#include "pufferfish/composition.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"

namespace pufferfish {
namespace {

using nlohmann::json;

constexpr char kVoid[] = "composition guarantee void";

json QuiltJson(const MarkovQuilt& q) {
  return json::array({q.node, static_cast<int>(q.shape), q.a, q.b});
}

absl::StatusOr<MarkovQuilt> QuiltFromJson(const json& j, int length) {
  if (!j.is_array() || j.size() != 4) {
    return absl::DataLossError("malformed quilt in ledger");
  }
  MarkovQuilt q{j[0].get<int>(), length,
                static_cast<QuiltShape>(j[1].get<int>()), j[2].get<int>(),
                j[3].get<int>()};
  if (!q.IsValid()) return absl::DataLossError("invalid quilt in ledger");
  return q;
}

json EntryBody(const LedgerEntry& e) {
  json active = json::array();
  for (const MarkovQuilt& q : e.active) active.push_back(QuiltJson(q));
  return json{{"query", e.query},
              {"epsilon", e.epsilon},
              {"active", active},
              {"prev", e.prev_hash}};
}

std::string EntryHash(const LedgerEntry& e) {
  return Sha256Hex(EntryBody(e).dump());
}

}  // namespace

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  for (unsigned int i = 0; i < len; ++i) absl::StrAppendFormat(&out, "%02x", digest[i]);
  return out;
}

double CompositionLedger::total() const {
  double max_eps = 0.0;
  for (const LedgerEntry& e : entries_) max_eps = std::max(max_eps, e.epsilon);
  return static_cast<double>(entries_.size()) * max_eps;
}

absl::Status CompositionLedger::Compose(const QuiltSetKey& key,
                                        const std::string& query,
                                        double epsilon,
                                        const std::vector<MarkovQuilt>& active) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError("epsilon must be positive and finite");
  }
  if (!(key == key_)) {
    return absl::FailedPreconditionError(
        absl::StrCat(kVoid, ": quilt sets differ from the ledger's"));
  }
  if (static_cast<int>(active.size()) != key_.length) {
    return absl::FailedPreconditionError(
        absl::StrCat(kVoid, ": expected one active quilt per node"));
  }
  for (const LedgerEntry& e : entries_) {
    if (e.epsilon == epsilon && e.active != active) {
      return absl::FailedPreconditionError(absl::StrCat(
          kVoid, ": active quilts differ from an earlier release at the same "
                 "epsilon"));
    }
  }
  LedgerEntry e;
  e.query = query;
  e.epsilon = epsilon;
  e.active = active;
  e.prev_hash = entries_.empty() ? Sha256Hex(HeaderLine()) : entries_.back().hash;
  e.hash = EntryHash(e);
  entries_.push_back(std::move(e));
  return absl::OkStatus();
}

absl::Status CompositionLedger::Compose(const QuiltSetKey& key,
                                        const std::string& query,
                                        const NoisePlan& plan) {
  if (static_cast<int>(plan.per_node.size()) != plan.length) {
    return absl::InvalidArgumentError("plan carries no per-node quilts");
  }
  std::vector<MarkovQuilt> active;
  for (const NodeResult& r : plan.per_node) active.push_back(r.quilt);
  return Compose(key, query, plan.epsilon, active);
}

std::string CompositionLedger::HeaderLine() const {
  return json{{"T", key_.length},
              {"ell", key_.ell},
              {"class", key_.class_fingerprint}}
      .dump();
}

std::string CompositionLedger::EntryLine(const LedgerEntry& e) const {
  json j = EntryBody(e);
  j["hash"] = e.hash;
  return j.dump();
}

absl::StatusOr<CompositionLedger> CompositionLedger::Parse(
    const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) return absl::DataLossError("empty ledger");
  try {
    const json h = json::parse(line);
    CompositionLedger ledger(QuiltSetKey{h.at("T").get<int>(),
                                         h.at("ell").get<int>(),
                                         h.at("class").get<std::string>()});
    if (ledger.HeaderLine() != line) {
      return absl::DataLossError("ledger header is not canonical");
    }
    std::string prev = Sha256Hex(line);
    int lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      const json j = json::parse(line);
      LedgerEntry e;
      e.query = j.at("query").get<std::string>();
      e.epsilon = j.at("epsilon").get<double>();
      e.prev_hash = j.at("prev").get<std::string>();
      e.hash = j.at("hash").get<std::string>();
      for (const json& q : j.at("active")) {
        absl::StatusOr<MarkovQuilt> mq = QuiltFromJson(q, ledger.key_.length);
        if (!mq.ok()) return mq.status();
        e.active.push_back(*mq);
      }
      if (e.prev_hash != prev || EntryHash(e) != e.hash) {
        return absl::DataLossError(
            absl::StrFormat("ledger hash chain broken at line %d", lineno));
      }
      prev = e.hash;
      ledger.entries_.push_back(std::move(e));
    }
    return ledger;
  } catch (const json::exception& ex) {
    return absl::DataLossError(absl::StrCat("malformed ledger: ", ex.what()));
  }
}

absl::StatusOr<CompositionLedger> CompositionLedger::Load(
    const std::string& path) {
  std::ifstream f(path);
  if (!f) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream ss;
  ss << f.rdbuf();
  return Parse(ss.str());
}

absl::Status CompositionLedger::Save(const std::string& path) const {
  std::error_code ec;
  const bool has_content = std::filesystem::exists(path, ec) &&
                           std::filesystem::file_size(path, ec) > 0;
  size_t on_disk = 0;
  if (has_content) {
    absl::StatusOr<CompositionLedger> existing = Load(path);
    if (!existing.ok()) return existing.status();
    if (!(existing->key_ == key_)) {
      return absl::FailedPreconditionError(
          absl::StrCat(kVoid, ": ledger file has different quilt sets"));
    }
    on_disk = existing->entries_.size();
    if (on_disk > entries_.size()) {
      return absl::FailedPreconditionError("ledger file is ahead of memory");
    }
    for (size_t j = 0; j < on_disk; ++j) {
      if (existing->entries_[j].hash != entries_[j].hash) {
        return absl::FailedPreconditionError("ledger file diverges");
      }
    }
  }
  std::ofstream out(path, std::ios::app);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  if (!has_content) out << HeaderLine() << "\n";
  for (size_t j = on_disk; j < entries_.size(); ++j) {
    out << EntryLine(entries_[j]) << "\n";
  }
  return out ? absl::OkStatus() : absl::DataLossError("write failed");
}

}  // namespace pufferfish
