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

#include "contra/detection/scorer.h"

#include <cmath>
#include <unordered_map>

#include "contra/common/error.h"
#include "contra/common/fnv1a.h"
#include "contra/common/parallel.h"
#include "contra/metrics/tokenizer.h"

namespace contra {

double MockScorer::Score(const TextPair &pair) {
  std::uint64_t h = Fnv1a64(pair.premise);
  h = Fnv1a64("\x1f", h);
  h = Fnv1a64(pair.hypothesis, h);
  return std::ldexp(static_cast<double>(h), -64);
}

std::vector<double> MockScorer::ScorePairs(std::span<const TextPair> pairs) {
  return MapItems<double>(pairs.size(), exec_,
                          [&](std::size_t i) { return Score(pairs[i]); });
}

double OverlapScorer::Score(const TextPair &pair) {
  const TokenSeq premise = Tokenize(pair.premise);
  const TokenSeq hypothesis = Tokenize(pair.hypothesis);
  if (premise.empty() && hypothesis.empty()) return 1.0;
  if (premise.empty() || hypothesis.empty()) return 0.0;
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto &t : premise) ++counts[t];
  std::size_t common = 0;
  for (const auto &t : hypothesis) {
    auto it = counts.find(t);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++common;
    }
  }
  if (common == 0) return 0.0;
  const double p = static_cast<double>(common) / hypothesis.size();
  const double r = static_cast<double>(common) / premise.size();
  return 2.0 * p * r / (p + r);
}

std::vector<double> OverlapScorer::ScorePairs(std::span<const TextPair> pairs) {
  return MapItems<double>(pairs.size(), exec_,
                          [&](std::size_t i) { return Score(pairs[i]); });
}

std::vector<double> RemoteScorer::ScorePairs(std::span<const TextPair> pairs) {
  if (pairs.empty()) return {};
  return service_->ScorePairs(pairs);
}

std::string_view ScorerKindName(ScorerKind kind) {
  switch (kind) {
    case ScorerKind::kMock:
      return "mock";
    case ScorerKind::kOverlap:
      return "overlap";
    case ScorerKind::kRemote:
      return "remote";
  }
  return "mock";
}

std::optional<ScorerKind> ParseScorerKind(std::string_view name) {
  if (name == "mock") return ScorerKind::kMock;
  if (name == "overlap") return ScorerKind::kOverlap;
  if (name == "remote") return ScorerKind::kRemote;
  return std::nullopt;
}

std::unique_ptr<PairScorer> MakeScorer(ScorerKind kind,
                                       std::shared_ptr<ModelService> service,
                                       Execution exec) {
  switch (kind) {
    case ScorerKind::kMock:
      return std::make_unique<MockScorer>(exec);
    case ScorerKind::kOverlap:
      return std::make_unique<OverlapScorer>(exec);
    case ScorerKind::kRemote:
      if (!service) throw InvalidArgument("remote scorer needs a service");
      return std::make_unique<RemoteScorer>(std::move(service));
  }
  throw InvalidArgument("unknown scorer kind");
}

}  // namespace contra
