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

// contra: dialogue contradiction detection toolkit.
//
//   contra dataset {merge|cut|balance|adjudicate}
//   contra rewrite
//   contra detect
//   contra ensemble
//   contra eval {rewriting|detection}
//
// Data goes to files or standard output, diagnostics to standard error.
// Exit status: 0 ok, 1 usage, 2 data validation, 3 remote failure.

#include <iostream>
#include <optional>
#include <string>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "commands.h"
#include "contra/common/error.h"
#include "contra/common/execution.h"
#include "contra/common/file_util.h"
#include "contra/gateway/endpoint.h"
#include "contra/gateway/model_service.h"
#include "run_config.h"

namespace contra::cli {
namespace {

constexpr const char *kVersion = "0.1.0";

// Flags that override config-file values when given.
struct Overrides {
  std::optional<double> eta;
  std::optional<std::string> mode, scorer, rewriter, rules, cache, endpoint;
  std::optional<std::size_t> max_context, batch_size;
  std::optional<std::uint64_t> seed;
  std::optional<int> parallelism, max_retries;
  std::optional<double> timeout, backoff_base;

  void ApplyTo(RunConfig *c) const {
    if (eta) c->eta = *eta;
    if (mode) c->mode = *mode;
    if (scorer) c->scorer = *scorer;
    if (rewriter) c->rewriter = *rewriter;
    if (rules) c->rules = *rules;
    if (cache) c->cache = *cache;
    if (endpoint) c->endpoint.base_url = *endpoint;
    if (max_context) c->max_context = *max_context;
    if (batch_size) c->endpoint.batch_size = *batch_size;
    if (seed) c->seed = *seed;
    if (parallelism) {
      c->parallelism = *parallelism;
      c->endpoint.parallelism = *parallelism;
    }
    if (max_retries) c->endpoint.max_retries = *max_retries;
    if (timeout) c->endpoint.timeout_s = *timeout;
    if (backoff_base) c->endpoint.backoff_base_s = *backoff_base;
  }
};

void AddConfigOptions(CLI::App *app, Overrides *o) {
  const char *g = "Run config";
  app->add_option("--eta", o->eta, "Decision threshold in (0,1) [0.5]")->group(g);
  app->add_option("--mode", o->mode, "sub | sub-concat | unstructured [sub]")
      ->group(g);
  app->add_option("--scorer", o->scorer, "mock | overlap | remote [mock]")
      ->group(g);
  app->add_option("--rewriter", o->rewriter,
                  "identity | rules | remote [identity]")
      ->group(g);
  app->add_option("--rules", o->rules, "Rule table (pattern<TAB>replacement)")
      ->group(g);
  app->add_option("--max-context", o->max_context,
                  "Context turns given to the rewriter [6]")
      ->group(g);
  app->add_option("--seed", o->seed, "Sampling seed [0]")->group(g);
  app->add_option("--cache", o->cache, "Response cache file (JSONL)")->group(g);
  app->add_option("--parallelism", o->parallelism,
                  "Worker threads and in-flight batches [4]")
      ->group(g);
  app->add_option("--endpoint", o->endpoint, "Inference service base URL")
      ->group(g);
  app->add_option("--timeout", o->timeout, "Request timeout, seconds [30]")
      ->group(g);
  app->add_option("--max-retries", o->max_retries,
                  "Retries for network errors and 5xx [3]")
      ->group(g);
  app->add_option("--backoff-base", o->backoff_base,
                  "Retry k sleeps backoff_base*2^k seconds [0.5]")
      ->group(g);
  app->add_option("--batch-size", o->batch_size, "Items per request [32]")
      ->group(g);
}

void InitLogging(const std::string &level) {
  auto logger = spdlog::stderr_logger_mt("contra");
  logger->set_pattern("contra: %l: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(level));
}

int Main(int argc, char **argv) {
  CLI::App app{"Dialogue contradiction detection toolkit", "contra"};
  app.set_version_flag("--version",
                       std::string("contra ") + kVersion + " (wire protocol v" +
                           std::to_string(kWireProtocolVersion) + ")");
  app.require_subcommand(0, 1);

  std::string config_path;
  bool print_config = false;
  std::string log_level = "info";
  Overrides overrides;
  app.add_option("--config", config_path, "Flat key=value config file");
  app.add_flag("--print-config", print_config,
               "Print the resolved config (stdout without a subcommand, "
               "stderr otherwise)");
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));
  AddConfigOptions(&app, &overrides);

  // dataset
  auto *dataset = app.add_subcommand("dataset", "Corpus construction");
  dataset->require_subcommand(1);
  MergeArgs merge;
  auto *merge_cmd = dataset->add_subcommand(
      "merge", "Drop one-exchange dialogues and dialogues that prefix another");
  merge_cmd->add_option("--in", merge.in, "Dialogues (JSONL)")->required();
  merge_cmd->add_option("--out", merge.out, "Output path [-]");
  CutArgs cut;
  auto *cut_cmd = dataset->add_subcommand(
      "cut", "One detection example per bot turn");
  cut_cmd->add_option("--in", cut.in, "Dialogues (JSONL)")->required();
  cut_cmd->add_option("--out", cut.out, "Output path [-]");
  BalanceArgs balance;
  auto *balance_cmd = dataset->add_subcommand(
      "balance", "Keep all positives plus as many seeded-sampled negatives");
  balance_cmd->add_option("--in", balance.in, "Labeled examples (JSONL)")
      ->required();
  balance_cmd->add_option("--out", balance.out, "Output path [-]");
  AdjudicateArgs adjudicate;
  auto *adjudicate_cmd = dataset->add_subcommand(
      "adjudicate", "Two-round vote aggregation with adjudicator fallback");
  adjudicate_cmd->add_option("--votes", adjudicate.votes, "Votes (JSONL)")
      ->required();
  adjudicate_cmd->add_option("--out", adjudicate.out,
                             "Per-id states (JSONL) [-]");
  adjudicate_cmd->add_option("--examples", adjudicate.examples,
                             "Unlabeled examples to label");
  adjudicate_cmd->add_option("--labeled", adjudicate.labeled,
                             "Finalized, labeled examples");

  // rewrite
  RewriteArgs rewrite;
  auto *rewrite_cmd =
      app.add_subcommand("rewrite", "Rewrite every bot utterance");
  rewrite_cmd->add_option("--in", rewrite.in, "Input corpus (JSONL)")
      ->required();
  rewrite_cmd->add_option("--out", rewrite.out, "Output path [-]");
  rewrite_cmd->add_option("--records", rewrite.records,
                          "detection | dialogue [detection]");
  rewrite_cmd->add_flag("--dry-run-report", rewrite.dry_run_report,
                        "Print what would be sent, without network I/O");

  // detect
  DetectArgs detect;
  auto *detect_cmd = app.add_subcommand(
      "detect", "Score detection examples (optionally rewriting first)");
  detect_cmd->add_option("--in", detect.in, "Detection examples (JSONL)")
      ->required();
  detect_cmd->add_option("--out", detect.out, "Predictions path [-]");
  detect_cmd->add_option("--examples-per-call", detect.examples_per_call,
                         "Examples whose pairs share one scorer call [256]")
      ->check(CLI::PositiveNumber);
  detect_cmd->add_flag("--skip-health", detect.skip_health,
                       "No /health preflight for remote runs");

  // ensemble
  EnsembleArgs ensemble;
  auto *ensemble_cmd = app.add_subcommand(
      "ensemble", "Average pair scores of several prediction files");
  ensemble_cmd->add_option("--in", ensemble.in, "Prediction files (repeat)")
      ->required();
  ensemble_cmd->add_option("--out", ensemble.out, "Output path [-]");

  // eval
  auto *eval = app.add_subcommand("eval", "Metric reports (table + JSON)");
  eval->require_subcommand(1);
  EvalRewritingArgs eval_rw;
  auto *eval_rw_cmd = eval->add_subcommand(
      "rewriting", "BLEU, ROUGE-1/L, EM, restoration F1, change rate");
  eval_rw_cmd->add_option("--in", eval_rw.in, "Rewrite examples (JSONL)")
      ->required();
  eval_rw_cmd->add_option("--json", eval_rw.json,
                          "Write the JSON report here instead of stdout");
  eval_rw_cmd->add_flag("--agreement", eval_rw.agreement,
                        "Score reference 1 against reference 2");
  eval_rw_cmd->add_flag("--self-eval", eval_rw.self_eval,
                        "Use the first reference as the hypothesis");
  eval_rw_cmd->add_flag("--human", eval_rw.human,
                        "Add the human-label summary");
  eval_rw_cmd->add_option("--restoration-n", eval_rw.restoration_n,
                          "n-gram order of restoration P/R/F [1]");
  EvalDetectionArgs eval_det;
  auto *eval_det_cmd = eval->add_subcommand(
      "detection", "P/R/F1, AUPR, SE P/R/F1, Joint-Acc");
  eval_det_cmd->add_option("--gold", eval_det.gold, "Gold examples (JSONL)")
      ->required();
  eval_det_cmd->add_option("--pred", eval_det.pred,
                           "Prediction files, one table row each (repeat)")
      ->required();
  eval_det_cmd->add_option("--json", eval_det.json,
                           "Write the JSON report here instead of stdout");

  // Config options are accepted after the subcommand too.
  for (CLI::App *sub : {dataset, merge_cmd, cut_cmd, balance_cmd,
                        adjudicate_cmd, rewrite_cmd, detect_cmd, ensemble_cmd,
                        eval, eval_rw_cmd, eval_det_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  InitLogging(log_level);

  try {
    RunConfig config;
    if (!config_path.empty()) ApplyConfigText(&config, ReadFile(config_path));
    overrides.ApplyTo(&config);
    config.Validate();
    SetParallelism(config.parallelism);

    if (print_config) {
      (app.get_subcommands().empty() ? std::cout : std::cerr)
          << PrintConfig(config);
    }
    if (app.get_subcommands().empty()) {
      if (print_config) return kExitOk;
      std::cerr << app.help();
      return kExitUsage;
    }

    if (*merge_cmd) return RunMerge(config, merge);
    if (*cut_cmd) return RunCut(config, cut);
    if (*balance_cmd) return RunBalance(config, balance);
    if (*adjudicate_cmd) return RunAdjudicate(config, adjudicate);
    if (*rewrite_cmd) return RunRewrite(config, rewrite);
    if (*detect_cmd) return RunDetect(config, detect);
    if (*ensemble_cmd) return RunEnsemble(config, ensemble);
    if (*eval_rw_cmd) return RunEvalRewriting(config, eval_rw);
    if (*eval_det_cmd) return RunEvalDetection(config, eval_det);
    return kExitUsage;
  } catch (const UsageError &e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  } catch (const GatewayError &e) {
    spdlog::error("remote failure ({}, request {}, {} attempts): {}",
                  GatewayErrorKindName(e.kind()), e.request_digest(),
                  e.attempts(), e.detail());
    return kExitRemote;
  } catch (const std::exception &e) {
    spdlog::error("{}", e.what());
    return kExitData;
  }
}

}  // namespace
}  // namespace contra::cli

int main(int argc, char **argv) { return contra::cli::Main(argc, argv); }
