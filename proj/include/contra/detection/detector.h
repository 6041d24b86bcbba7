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

#ifndef CONTRA_DETECTION_DETECTOR_H_
#define CONTRA_DETECTION_DETECTOR_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "contra/core/types.h"
#include "contra/detection/decision.h"
#include "contra/detection/scorer.h"
#include "contra/gateway/response_cache.h"
#include "contra/rewriting/batch_rewrite.h"
#include "contra/rewriting/rewriter.h"

namespace contra {

struct DetectionConfig {
  DetectionMode mode = DetectionMode::kSub;
  // Decision threshold in (0, 1).
  double eta = kDefaultEta;

  // Throws InvalidArgument when eta is outside (0, 1).
  void Validate() const;
};

// Pairs fed to the classifier for one example.
//   sub:          (u_i^B, u_n^B) for every prior bot turn, in order
//   sub-concat:   each bot text prefixed by the human turn right before it
//                 ("<human> <bot>"), or alone when no human turn precedes it
//   unstructured: one pair, all prior turns encoded with [H]/[B] speaker
//                 tokens against the last bot text
// The sub modes yield no pairs when there is no prior bot turn.
std::vector<TextPair> MakePairs(const DetectionExample &example,
                                DetectionMode mode);

// Scores every pair and applies the threshold decision. An example without
// prior bot turns is a non-contradiction with score 0.
PredictionRecord Detect(const DetectionExample &example, PairScorer &scorer,
                        const DetectionConfig &config);

// Detect() on the example with every bot turn rewritten first.
PredictionRecord DetectWithRewriting(const DetectionExample &example,
                                     const RewriterKind &rewriter,
                                     PairScorer &scorer,
                                     const DetectionConfig &config,
                                     std::size_t max_context = kDefaultMaxContext);

struct ExampleFailure {
  std::size_t index = 0;
  std::string id;
  std::string message;
  bool remote = false;  // caused by a GatewayError
};

struct CorpusPredictions {
  // Successful predictions, in input order.
  std::vector<PredictionRecord> records;
  std::vector<ExampleFailure> failures;
  std::size_t pairs_scored = 0;
};

struct ScoreCorpusOptions {
  // Pairs of this many consecutive examples share one scorer call.
  std::size_t examples_per_call = 256;
};

// Batched Detect() over a corpus. When a scorer call fails, its examples are
// retried one at a time so the failure is pinned to the examples that cause
// it; the rest of the corpus still gets scored.
CorpusPredictions ScoreCorpus(std::span<const DetectionExample> examples,
                              PairScorer &scorer, const DetectionConfig &config,
                              const ScoreCorpusOptions &options = {});

// BatchRewrite() followed by ScoreCorpus(). Rewriting failures abort.
CorpusPredictions ScoreCorpusWithRewriting(
    std::span<const DetectionExample> examples, const RewriterKind &rewriter,
    const BatchRewriteOptions &rewrite_options, ResponseCache *cache,
    PairScorer &scorer, const DetectionConfig &config,
    const ScoreCorpusOptions &options = {});

}  // namespace contra

#endif  // CONTRA_DETECTION_DETECTOR_H_
