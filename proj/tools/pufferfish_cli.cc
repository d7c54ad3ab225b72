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

// Command-line front end: scale, privatize, bench, estimate, compose.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "pufferfish/bench.h"
#include "pufferfish/composition.h"
#include "pufferfish/ingest.h"
#include "pufferfish/joint_model.h"
#include "pufferfish/json_io.h"
#include "pufferfish/mqm_exact.h"
#include "pufferfish/planner.h"

namespace pufferfish {
namespace {

struct RunConfig {
  std::string config;
  std::string data;
  std::string query = "rel_freq_histogram";
  std::string mechanism = "mqm_exact";
  std::string out;
  std::string ledger;
  std::string gap_mode = "pp_star";
  double epsilon = 1.0;
  int ell = 0;
  uint64_t seed = 0;
  int trials = 500;
  int threads = 0;
  bool verbose = false;
  // Ingestion.
  std::string timestamp_col = "timestamp";
  std::string value_col = "value";
  double width = 200.0;
  double origin = 0.0;
  int states = 0;
  std::vector<std::string> labels;
  double gap = 600.0;
  double smoothing = 1.0;
  bool stationary_q = false;
  // Bench.
  std::vector<double> alphas = {0.1, 0.2, 0.3, 0.4};
  std::vector<double> epsilons = {0.2, 1.0, 5.0};
  std::vector<std::string> mechanisms = {"mqm_exact", "mqm_approx", "group_dp"};
  int length = 100;
  double grid_step = 0.01;
};

absl::Status Emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return absl::OkStatus();
  }
  std::ofstream f(cfg.out);
  if (!f) return absl::PermissionDeniedError(absl::StrCat("cannot write ", cfg.out));
  f << text;
  return absl::OkStatus();
}

absl::StatusOr<DistributionClass> LoadClass(const RunConfig& cfg) {
  if (cfg.config.empty()) return absl::InvalidArgumentError("--config is required");
  absl::StatusOr<Json> j = ReadJsonFile(cfg.config);
  if (!j.ok()) return j.status();
  return ClassFromJson(*j);
}

DiscretizeSpec SpecFrom(const RunConfig& cfg) {
  DiscretizeSpec spec;
  spec.width = cfg.width;
  spec.origin = cfg.origin;
  spec.states = cfg.states;
  spec.labels = cfg.labels;
  spec.gap_threshold = cfg.gap;
  return spec;
}

// Chain data: a JSON array of 1-based states (or {"states": [...]}) forming
// one chain, or a CSV series.
absl::StatusOr<DiscretizedSeries> LoadSeries(const RunConfig& cfg, int k) {
  if (cfg.data.empty()) return absl::InvalidArgumentError("--data is required");
  if (cfg.data.ends_with(".json")) {
    absl::StatusOr<Json> j = ReadJsonFile(cfg.data);
    if (!j.ok()) return j.status();
    const Json& arr = j->is_object() ? j->at("states") : *j;
    DiscretizedSeries s;
    s.k = k;
    for (const Json& v : arr) {
      const int st = v.get<int>();
      if (st < 1 || st > k) {
        return absl::InvalidArgumentError(
            absl::StrFormat("state %d outside 1..%d", st, k));
      }
      s.states.push_back(st - 1);
    }
    if (s.states.empty()) return absl::InvalidArgumentError("no data");
    s.segmentation = ChainSegmentation::Single(static_cast<int>(s.states.size()));
    return s;
  }
  absl::StatusOr<RawSeries> raw =
      LoadCsv(cfg.data, CsvSchema{cfg.timestamp_col, cfg.value_col});
  if (!raw.ok()) return raw.status();
  DiscretizeSpec spec = SpecFrom(cfg);
  if (spec.labels.empty() && spec.states == 0) spec.states = k;
  absl::StatusOr<DiscretizedSeries> s = Discretize(*raw, spec);
  if (!s.ok()) return s;
  if (s->k != k) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "data has %d states but the class has %d", s->k, k));
  }
  return s;
}

absl::StatusOr<PlanOutcome> ChainPlan(const RunConfig& cfg,
                                      const DistributionClass& cls,
                                      const LipschitzQuery& query,
                                      std::vector<int> lengths) {
  absl::StatusOr<GapMode> mode = ParseGapMode(cfg.gap_mode);
  if (!mode.ok()) return mode.status();
  return PlanForClass(cls, query,
                      PlanRequest{cfg.mechanism, cfg.epsilon, cfg.ell, *mode,
                                  std::move(lengths), cfg.threads});
}

absl::Status CmdScale(const RunConfig& cfg) {
  if (absl::Status s = CheckEpsilon(cfg.epsilon); !s.ok()) return s;
  absl::StatusOr<Json> j = ReadJsonFile(cfg.config);
  if (!j.ok()) return j.status();
  if (cfg.mechanism == "wasserstein") {
    absl::StatusOr<std::vector<JointModel>> models = JointModelsFromJson(*j);
    if (!models.ok()) return models.status();
    const JointModel& m0 = models->front();
    absl::StatusOr<LipschitzQuery> q = BuiltinQuery(cfg.query, m0.n(), m0.domain());
    if (!q.ok()) return q.status();
    absl::StatusOr<NoisePlan> plan = WassersteinPlan(*models, *q, cfg.epsilon);
    if (!plan.ok()) return plan.status();
    return Emit(cfg, PlanToJson(*plan).dump(2) + "\n");
  }
  absl::StatusOr<DistributionClass> cls = ClassFromJson(*j);
  if (!cls.ok()) return cls.status();
  absl::StatusOr<LipschitzQuery> q =
      BuiltinQuery(cfg.query, cls->length(), cls->states());
  if (!q.ok()) return q.status();
  absl::StatusOr<PlanOutcome> plan = ChainPlan(cfg, *cls, *q, {});
  if (!plan.ok()) return plan.status();
  Json out = PlanToJson(plan->plan);
  if (plan->summary) out["mixing_summary"] = SummaryToJson(*plan->summary);
  return Emit(cfg, out.dump(2) + "\n");
}

absl::Status CmdPrivatize(const RunConfig& cfg) {
  if (absl::Status s = CheckEpsilon(cfg.epsilon); !s.ok()) return s;
  LaplaceSource src(cfg.seed);
  absl::StatusOr<Json> j = ReadJsonFile(cfg.config);
  if (!j.ok()) return j.status();
  if (cfg.mechanism == "wasserstein") {
    absl::StatusOr<std::vector<JointModel>> models = JointModelsFromJson(*j);
    if (!models.ok()) return models.status();
    const JointModel& m0 = models->front();
    absl::StatusOr<Json> dj = ReadJsonFile(cfg.data);
    if (!dj.ok()) return dj.status();
    const std::vector<int> data = dj->get<std::vector<int>>();
    if (static_cast<int>(data.size()) != m0.n()) {
      return absl::InvalidArgumentError("data must list one value per record");
    }
    absl::StatusOr<LipschitzQuery> q = BuiltinQuery(cfg.query, m0.n(), m0.domain());
    if (!q.ok()) return q.status();
    absl::StatusOr<PrivateRelease> r =
        WassersteinMechanism(*models, *q, data, cfg.epsilon, src);
    if (!r.ok()) return r.status();
    return Emit(cfg, ReleaseToJson(*r).dump(2) + "\n");
  }
  absl::StatusOr<DistributionClass> cls = ClassFromJson(*j);
  if (!cls.ok()) return cls.status();
  absl::StatusOr<DiscretizedSeries> series = LoadSeries(cfg, cls->states());
  if (!series.ok()) return series.status();
  const int total = static_cast<int>(series->states.size());
  absl::StatusOr<LipschitzQuery> q = BuiltinQuery(cfg.query, total, cls->states());
  if (!q.ok()) return q.status();
  absl::StatusOr<PlanOutcome> plan =
      ChainPlan(cfg, *cls, *q, series->segmentation.Lengths());
  if (!plan.ok()) return plan.status();
  absl::StatusOr<PrivateRelease> r =
      Privatize(plan->plan, *q, series->states, src);
  if (!r.ok()) return r.status();
  Json out = ReleaseToJson(*r);
  out["seed"] = cfg.seed;
  return Emit(cfg, out.dump(2) + "\n");
}

absl::Status CmdBench(const RunConfig& cfg) {
  BenchConfig bc;
  bc.alphas = cfg.alphas;
  bc.epsilons = cfg.epsilons;
  bc.mechanisms = cfg.mechanisms;
  bc.trials = cfg.trials;
  bc.length = cfg.length;
  bc.grid_step = cfg.grid_step;
  bc.seed = cfg.seed;
  bc.threads = cfg.threads;
  absl::StatusOr<std::vector<BenchCell>> cells = RunBench(bc);
  if (!cells.ok()) return cells.status();
  std::string csv;
  if (cfg.verbose) {
    csv = "alpha,epsilon,mechanism,trial,abs_error\n";
    for (const BenchCell& c : *cells) {
      for (size_t t = 0; t < c.errors.size(); ++t) {
        absl::StrAppendFormat(&csv, "%.4g,%.4g,%s,%d,%.17g\n", c.alpha,
                              c.epsilon, c.mechanism, t, c.errors[t]);
      }
    }
  } else {
    csv = "alpha,epsilon,mechanism,mean_L1_error\n";
    for (const BenchCell& c : *cells) {
      absl::StrAppendFormat(&csv, "%.4g,%.4g,%s,%.17g\n", c.alpha, c.epsilon,
                            c.mechanism, c.mean_error);
    }
  }
  return Emit(cfg, csv);
}

absl::Status CmdEstimate(const RunConfig& cfg) {
  if (cfg.data.empty()) return absl::InvalidArgumentError("--data is required");
  absl::StatusOr<RawSeries> raw =
      LoadCsv(cfg.data, CsvSchema{cfg.timestamp_col, cfg.value_col});
  if (!raw.ok()) return raw.status();
  absl::StatusOr<DiscretizedSeries> series = Discretize(*raw, SpecFrom(cfg));
  if (!series.ok()) return series.status();
  absl::StatusOr<TransitionEstimate> est =
      EstimateTransition(*series, cfg.smoothing, cfg.stationary_q);
  if (!est.ok()) return est.status();
  return Emit(cfg, EstimateToJson(*est, *series).dump(2) + "\n");
}

absl::Status CmdCompose(const RunConfig& cfg) {
  if (cfg.ledger.empty()) return absl::InvalidArgumentError("--ledger is required");
  if (absl::Status s = CheckEpsilon(cfg.epsilon); !s.ok()) return s;
  absl::StatusOr<DistributionClass> cls = LoadClass(cfg);
  if (!cls.ok()) return cls.status();
  absl::StatusOr<LipschitzQuery> q =
      BuiltinQuery(cfg.query, cls->length(), cls->states());
  if (!q.ok()) return q.status();
  if (cfg.mechanism != "mqm_exact" && cfg.mechanism != "mqm_approx") {
    return absl::InvalidArgumentError("compose supports mqm_exact and mqm_approx");
  }
  absl::StatusOr<PlanOutcome> plan = ChainPlan(cfg, *cls, *q, {});
  if (!plan.ok()) return plan.status();
  const int ell = cfg.ell > 0 ? std::min(cfg.ell, cls->length()) : cls->length();
  const QuiltSetKey key{cls->length(), ell, ClassFingerprint(*cls)};
  CompositionLedger ledger(key);
  if (std::ifstream probe(cfg.ledger); probe && probe.peek() != EOF) {
    absl::StatusOr<CompositionLedger> loaded = CompositionLedger::Load(cfg.ledger);
    if (!loaded.ok()) return loaded.status();
    ledger = *std::move(loaded);
  }
  if (absl::Status s = ledger.Compose(key, cfg.query, plan->plan); !s.ok()) return s;
  if (absl::Status s = ledger.Save(cfg.ledger); !s.ok()) return s;
  Json out{{"ledger", cfg.ledger},
           {"entries", ledger.entries().size()},
           {"total_epsilon", ledger.total()},
           {"last_hash", ledger.entries().back().hash}};
  std::cout << out.dump(2) << "\n";
  return absl::OkStatus();
}

}  // namespace
}  // namespace pufferfish

int main(int argc, char** argv) {
  using pufferfish::RunConfig;
  RunConfig cfg;
  CLI::App app{"Pufferfish privacy mechanisms for correlated data"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", cfg.config, "Class spec or joint model JSON");
    sub->add_option("--epsilon", cfg.epsilon, "Privacy parameter");
    sub->add_option("--ell", cfg.ell, "Maximum quilt extent (default T)");
    sub->add_option("--mechanism", cfg.mechanism,
                    "wasserstein, mqm_exact, mqm_approx, mqm_approx_fast, "
                    "group_dp or entry_dp");
    sub->add_option("--query", cfg.query,
                    "rel_freq_histogram, count_histogram, state_frequency(s), "
                    "state_count(s) or value_sum");
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
    sub->add_option("--gap-mode", cfg.gap_mode, "pp_star or reversible");
    sub->add_option("--threads", cfg.threads, "Worker threads");
  };
  auto add_ingest = [&](CLI::App* sub) {
    sub->add_option("--data", cfg.data, "Data file (CSV, or JSON states)");
    sub->add_option("--timestamp-col", cfg.timestamp_col);
    sub->add_option("--value-col", cfg.value_col);
    sub->add_option("--width", cfg.width, "Numeric bin width");
    sub->add_option("--origin", cfg.origin, "Numeric bin origin");
    sub->add_option("--states", cfg.states, "Number of numeric states");
    sub->add_option("--labels", cfg.labels, "Categorical labels in state order")
        ->delimiter(',');
    sub->add_option("--gap", cfg.gap, "Gap in seconds that starts a new chain");
  };

  CLI::App* scale = app.add_subcommand("scale", "Compute a noise plan");
  add_common(scale);
  CLI::App* priv = app.add_subcommand("privatize", "Release a private answer");
  add_common(priv);
  add_ingest(priv);
  priv->add_option("--seed", cfg.seed, "Random seed")->required();
  CLI::App* bench = app.add_subcommand("bench", "Synthetic binary-chain sweep");
  bench->add_option("--seed", cfg.seed, "Random seed")->required();
  bench->add_option("--trials", cfg.trials, "Trials per cell")
      ->check(CLI::PositiveNumber);
  bench->add_option("--alphas", cfg.alphas)->delimiter(',');
  bench->add_option("--epsilons", cfg.epsilons)->delimiter(',');
  bench->add_option("--mechanisms", cfg.mechanisms)->delimiter(',');
  bench->add_option("--length", cfg.length, "Chain length");
  bench->add_option("--grid-step", cfg.grid_step);
  bench->add_option("--out", cfg.out);
  bench->add_option("--threads", cfg.threads);
  bench->add_flag("--verbose", cfg.verbose, "Per-trial rows");
  CLI::App* estimate = app.add_subcommand("estimate", "Estimate a chain from data");
  add_ingest(estimate);
  estimate->add_option("--smoothing", cfg.smoothing, "Additive pseudo-count");
  estimate->add_flag("--stationary-q", cfg.stationary_q,
                     "Use the stationary distribution as q");
  estimate->add_option("--out", cfg.out);
  CLI::App* compose = app.add_subcommand("compose", "Append to a composition ledger");
  add_common(compose);
  compose->add_option("--ledger", cfg.ledger, "JSON-lines ledger")->required();

  CLI11_PARSE(app, argc, argv);

  absl::Status status;
  if (scale->parsed()) {
    status = pufferfish::CmdScale(cfg);
  } else if (priv->parsed()) {
    status = pufferfish::CmdPrivatize(cfg);
  } else if (bench->parsed()) {
    status = pufferfish::CmdBench(cfg);
  } else if (estimate->parsed()) {
    status = pufferfish::CmdEstimate(cfg);
  } else if (compose->parsed()) {
    status = pufferfish::CmdCompose(cfg);
  }
  if (!status.ok()) {
    std::cerr << "error: " << status.message() << "\n";
    return 1;
  }
  return 0;
}
