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

#ifndef CONTRA_TOOLS_COMMANDS_H_
#define CONTRA_TOOLS_COMMANDS_H_

#include <string>
#include <vector>

#include "run_config.h"

namespace contra::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitRemote = 3;

// Path "-" means standard input / output throughout.

struct MergeArgs {
  std::string in, out = "-";
};
struct CutArgs {
  std::string in, out = "-";
};
struct BalanceArgs {
  std::string in, out = "-";
};
struct AdjudicateArgs {
  std::string votes;
  std::string out = "-";  // per-id states
  std::string examples;   // optional unlabeled examples ...
  std::string labeled;    // ... written here with finalized labels
};
struct RewriteArgs {
  std::string in, out = "-";
  std::string records = "detection";  // detection | dialogue
  bool dry_run_report = false;
};
struct DetectArgs {
  std::string in, out = "-";
  std::size_t examples_per_call = 256;
  bool skip_health = false;
};
struct EnsembleArgs {
  std::vector<std::string> in;
  std::string out = "-";
};
struct EvalRewritingArgs {
  std::string in;
  std::string json;  // empty: JSON goes to stdout after the table
  bool agreement = false;
  bool self_eval = false;
  bool human = false;
  int restoration_n = 1;
};
struct EvalDetectionArgs {
  std::string gold;
  std::vector<std::string> pred;
  std::string json;
};

int RunMerge(const RunConfig &config, const MergeArgs &args);
int RunCut(const RunConfig &config, const CutArgs &args);
int RunBalance(const RunConfig &config, const BalanceArgs &args);
int RunAdjudicate(const RunConfig &config, const AdjudicateArgs &args);
int RunRewrite(const RunConfig &config, const RewriteArgs &args);
int RunDetect(const RunConfig &config, const DetectArgs &args);
int RunEnsemble(const RunConfig &config, const EnsembleArgs &args);
int RunEvalRewriting(const RunConfig &config, const EvalRewritingArgs &args);
int RunEvalDetection(const RunConfig &config, const EvalDetectionArgs &args);

}  // namespace contra::cli

#endif  // CONTRA_TOOLS_COMMANDS_H_
