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

#ifndef CONTRA_DETECTION_SCORER_H_
#define CONTRA_DETECTION_SCORER_H_

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "contra/common/execution.h"
#include "contra/gateway/model_service.h"

namespace contra {

// Contradiction probability for (premise, hypothesis) pairs. Output length
// equals input length and every value lies in [0, 1]. Implementations must
// tolerate concurrent calls.
class PairScorer {
 public:
  virtual ~PairScorer() = default;
  virtual std::vector<double> ScorePairs(std::span<const TextPair> pairs) = 0;
};

// FNV-1a 64 of premise + "\x1f" + hypothesis, divided by 2^64. Deterministic
// and platform-independent; useful for plumbing tests.
class MockScorer : public PairScorer {
 public:
  explicit MockScorer(Execution exec = Execution::kParallel) : exec_(exec) {}
  std::vector<double> ScorePairs(std::span<const TextPair> pairs) override;
  static double Score(const TextPair &pair);

 private:
  Execution exec_;
};

// Token-level F1 overlap between premise and hypothesis under the canonical
// tokenizer. A weak heuristic for end-to-end smoke runs.
class OverlapScorer : public PairScorer {
 public:
  explicit OverlapScorer(Execution exec = Execution::kParallel) : exec_(exec) {}
  std::vector<double> ScorePairs(std::span<const TextPair> pairs) override;
  static double Score(const TextPair &pair);

 private:
  Execution exec_;
};

// Delegates to a remote classifier through the model gateway.
class RemoteScorer : public PairScorer {
 public:
  explicit RemoteScorer(std::shared_ptr<ModelService> service)
      : service_(std::move(service)) {}
  std::vector<double> ScorePairs(std::span<const TextPair> pairs) override;

 private:
  std::shared_ptr<ModelService> service_;
};

enum class ScorerKind { kMock, kOverlap, kRemote };

std::string_view ScorerKindName(ScorerKind kind);
std::optional<ScorerKind> ParseScorerKind(std::string_view name);

// `service` is required for kRemote and ignored otherwise.
std::unique_ptr<PairScorer> MakeScorer(ScorerKind kind,
                                       std::shared_ptr<ModelService> service,
                                       Execution exec = Execution::kParallel);

}  // namespace contra

#endif  // CONTRA_DETECTION_SCORER_H_
