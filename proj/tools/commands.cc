// Copyright 2026 The Contra Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <utility>

#include <spdlog/spdlog.h>

#include "contra/common/error.h"
#include "contra/common/file_util.h"
#include "contra/core/records_io.h"
#include "contra/core/validate.h"
#include "contra/dataset/dataset_tools.h"
#include "contra/detection/detector.h"
#include "contra/detection/ensemble.h"
#include "contra/detection/scorer.h"
#include "contra/gateway/cached_service.h"
#include "contra/gateway/client.h"
#include "contra/gateway/response_cache.h"
#include "contra/metrics/report.h"
#include "contra/rewriting/batch_rewrite.h"

namespace contra::cli {

namespace {

// Record parsing with the file name folded into the error.
template <typename Record>
std::vector<Record> ReadCorpus(const std::string &path) {
  const std::string data = ReadFile(path);
  try {
    return ParseRecords<Record>(std::string_view(data));
  } catch (const ValidationError &e) {
    throw ValidationError(e.line(), e.field_path(),
                          (path == "-" ? "<stdin>" : path) + ": " + e.message());
  }
}

template <typename Record>
void WriteCorpus(const std::string &path, const std::vector<Record> &records) {
  WriteFileAtomically(path, SerializeRecords<Record>(records));
}

std::shared_ptr<ResponseCache> OpenCache(const RunConfig &config) {
  if (config.cache.empty()) return nullptr;
  return std::make_shared<ResponseCache>(config.cache);
}

std::shared_ptr<GatewayClient> MakeClient(const RunConfig &config) {
  Endpoint endpoint = config.endpoint;
  endpoint.parallelism = config.parallelism;
  return std::make_shared<GatewayClient>(endpoint);
}

void LogGatewayStats(const GatewayClient &client) {
  const GatewayStats s = client.stats();
  spdlog::info("gateway: {} http requests, {} batches, {} items, {} retries",
               s.http_requests, s.batches, s.items, s.retries);
}

RewriterKind MakeRewriter(const RunConfig &config,
                          std::shared_ptr<GatewayClient> client) {
  if (config.rewriter == "rules") {
    return RuleTable::Parse(ReadFile(config.rules));
  }
  if (config.rewriter == "remote") return RemoteRewriter{std::move(client)};
  return IdentityRewriter{};
}

void EmitReport(const std::string &table, const Json &json,
                const std::string &json_path) {
  std::cout << table;
  if (json_path.empty()) {
    std::cout << json.dump(2) << "\n";
  } else {
    WriteFileAtomically(json_path, json.dump(2) + "\n");
  }
  std::cout.flush();
}

std::string RowName(const std::string &path) {
  if (path == "-") return "stdin";
  return std::filesystem::path(path).stem().string();
}

}  // namespace

int RunMerge(const RunConfig &, const MergeArgs &args) {
  const auto dialogues = ReadCorpus<Dialogue>(args.in);
  const auto merged = MergeOverlapping(dialogues);
  WriteCorpus(args.out, merged);
  spdlog::info("merge: {} dialogues in, {} survivors", dialogues.size(),
               merged.size());
  return kExitOk;
}

int RunCut(const RunConfig &, const CutArgs &args) {
  const auto dialogues = ReadCorpus<Dialogue>(args.in);
  const auto examples = PrefixCutCorpus(dialogues);
  WriteCorpus(args.out, examples);
  spdlog::info("cut: {} dialogues, {} examples", dialogues.size(),
               examples.size());
  return kExitOk;
}

int RunBalance(const RunConfig &config, const BalanceArgs &args) {
  const auto examples = ReadCorpus<DetectionExample>(args.in);
  const auto balanced = BalancedSample(examples, config.seed);
  WriteCorpus(args.out, balanced);
  spdlog::info("balance: {} examples in, {} out (seed {})", examples.size(),
               balanced.size(), config.seed);
  return kExitOk;
}

int RunAdjudicate(const RunConfig &, const AdjudicateArgs &args) {
  if (args.examples.empty() != args.labeled.empty()) {
    throw UsageError("--examples and --labeled go together");
  }
  const auto votes = ParseVotes(ReadFile(args.votes));
  const auto outcomes = AdjudicateVotes(votes);

  std::string states;
  std::size_t counts[3] = {0, 0, 0};
  for (const AdjudicationOutcome &o : outcomes) {
    ++counts[static_cast<int>(o.state.kind)];
    Json j = Json::object();
    j["id"] = o.id;
    j["state"] = AdjudicationKindName(o.state.kind);
    if (o.state.kind == AdjudicationState::Kind::kFinalized) {
      j["label"] = o.state.label;
      j["evidence"] = o.state.evidence;
    }
    states += j.dump() + "\n";
  }
  WriteFileAtomically(args.out, states);
  spdlog::info("adjudicate: {} finalized, {} escalated to round 2, {} need "
               "adjudication",
               counts[0], counts[1], counts[2]);

  if (!args.examples.empty()) {
    const auto examples = ReadCorpus<DetectionExample>(args.examples);
    auto labeled = ApplyAdjudication(examples, outcomes);
    const auto violations = ValidateCorpus(std::span<const DetectionExample>(labeled));
    if (!violations.empty()) {
      const Violation &v = violations.front();
      throw ValidationError(0, v.field_path, v.record_id + ": " + v.message);
    }
    WriteCorpus(args.labeled, labeled);
    spdlog::info("adjudicate: {} of {} examples labeled", labeled.size(),
                 examples.size());
  }
  return kExitOk;
}

int RunRewrite(const RunConfig &config, const RewriteArgs &args) {
  if (args.records != "detection" && args.records != "dialogue") {
    throw UsageError("--records must be detection or dialogue");
  }
  auto cache = OpenCache(config);
  auto client = MakeClient(config);
  const RewriterKind kind = MakeRewriter(config, client);
  BatchRewriteOptions options;
  options.max_context = config.max_context;

  auto run = [&](const auto &corpus) {
    using Record = typename std::decay_t<decltype(corpus)>::value_type;
    if (args.dry_run_report) {
      const RewriteStats plan = PlanBatchRewrite(
          std::span<const Record>(corpus), kind, options, cache.get());
      Json j = Json::object();
      j["rewriter"] = config.rewriter;
      j["records"] = corpus.size();
      j["bot_turns"] = plan.bot_turns;
      j["unique_inputs"] = plan.unique_inputs;
      j["cache_hits"] = plan.cache_hits;
      j["remote_items"] = plan.remote_items;
      std::cout << j.dump() << "\n";
      return;
    }
    RewriteStats stats;
    const auto rewritten = BatchRewrite(std::span<const Record>(corpus), kind,
                                        options, cache.get(), &stats);
    WriteCorpus(args.out, rewritten);
    spdlog::info("rewrite: {} bot turns, {} unique inputs, {} cache hits, {} "
                 "sent to the service",
                 stats.bot_turns, stats.unique_inputs, stats.cache_hits,
                 stats.remote_items);
    if (config.rewriter == "remote") LogGatewayStats(*client);
  };
  if (args.records == "dialogue") {
    run(ReadCorpus<Dialogue>(args.in));
  } else {
    run(ReadCorpus<DetectionExample>(args.in));
  }
  return kExitOk;
}

int RunDetect(const RunConfig &config, const DetectArgs &args) {
  const auto examples = ReadCorpus<DetectionExample>(args.in);
  auto cache = OpenCache(config);
  auto client = MakeClient(config);
  const bool remote_scorer = config.scorer == "remote";
  const bool remote_any = remote_scorer || config.rewriter == "remote";

  if (remote_any && !args.skip_health) {
    const HealthInfo health = client->Health();
    spdlog::info("service {} reports status '{}' with model '{}'",
                 config.endpoint.base_url, health.status, health.model_name);
  }

  std::shared_ptr<ModelService> scoring_service;
  if (remote_scorer) {
    scoring_service = cache ? std::make_shared<CachedModelService>(client, cache)
                            : std::static_pointer_cast<ModelService>(client);
  }
  auto scorer = MakeScorer(*ParseScorerKind(config.scorer), scoring_service);

  DetectionConfig detection;
  detection.mode = config.detection_mode();
  detection.eta = config.eta;
  BatchRewriteOptions rewrite_options;
  rewrite_options.max_context = config.max_context;
  ScoreCorpusOptions score_options;
  score_options.examples_per_call = args.examples_per_call;

  const CorpusPredictions result = ScoreCorpusWithRewriting(
      examples, MakeRewriter(config, client), rewrite_options, cache.get(),
      *scorer, detection, score_options);
  WriteCorpus(args.out, result.records);
  spdlog::info("detect: {} examples, {} pairs scored, {} failures",
               examples.size(), result.pairs_scored, result.failures.size());
  if (remote_any) LogGatewayStats(*client);

  bool remote_failure = false;
  for (const ExampleFailure &f : result.failures) {
    spdlog::error("example {} ({}): {}", f.index + 1, f.id, f.message);
    remote_failure = remote_failure || f.remote;
  }
  if (result.failures.empty()) return kExitOk;
  return remote_failure ? kExitRemote : kExitData;
}

int RunEnsemble(const RunConfig &config, const EnsembleArgs &args) {
  if (args.in.empty()) throw UsageError("ensemble needs at least one --in");
  std::vector<std::vector<PredictionRecord>> corpora;
  for (const std::string &path : args.in) {
    corpora.push_back(ReadCorpus<PredictionRecord>(path));
  }
  const auto merged =
      EnsembleCorpora(corpora, config.eta, config.detection_mode());
  WriteCorpus(args.out, merged);
  spdlog::info("ensemble: {} files, {} records", corpora.size(), merged.size());
  return kExitOk;
}

int RunEvalRewriting(const RunConfig &, const EvalRewritingArgs &args) {
  if (args.agreement && args.self_eval) {
    throw UsageError("--agreement and --self-eval are exclusive");
  }
  if (args.restoration_n < 1) throw UsageError("--restoration-n must be >= 1");
  auto examples = ReadCorpus<RewriteExample>(args.in);
  RewriteEvalOptions options;
  options.restoration_n = args.restoration_n;

  RewriteEvalReport report;
  std::string row = RowName(args.in);
  if (args.agreement) {
    report = InterAnnotatorAgreement(examples, options);
    row = "Agreement";
  } else {
    if (args.self_eval) {
      for (RewriteExample &ex : examples) ex.hypothesis = ex.references.front();
      row = "References";
    }
    report = EvaluateRewrites(examples, options);
  }
  const std::pair<std::string, RewriteEvalReport> rows[] = {{row, report}};
  std::string table = FormatRewriteTable(rows);
  Json json = ReportToJson(report);
  if (args.human) {
    const HumanEvalSummary summary = SummarizeHumanEval(examples);
    table += "\n" + FormatHumanEvalTable(summary);
    json["human_eval"] = ReportToJson(summary);
  }
  EmitReport(table, json, args.json);
  return kExitOk;
}

int RunEvalDetection(const RunConfig &config, const EvalDetectionArgs &args) {
  if (args.pred.empty()) throw UsageError("eval detection needs --pred");
  const auto gold = ReadCorpus<DetectionExample>(args.gold);
  DetectionEvalOptions options;
  options.eta = config.eta;
  options.mode = config.detection_mode();

  std::vector<std::pair<std::string, DetectionEvalReport>> rows;
  for (const std::string &path : args.pred) {
    const auto preds = ReadCorpus<PredictionRecord>(path);
    rows.emplace_back(RowName(path), EvaluateDetection(gold, preds, options));
  }
  Json json;
  if (rows.size() == 1) {
    json = ReportToJson(rows.front().second);
  } else {
    json = Json::object();
    for (const auto &[name, report] : rows) json[name] = ReportToJson(report);
  }
  EmitReport(FormatDetectionTable(rows), json, args.json);
  return kExitOk;
}

}  // namespace contra::cli
