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

#include "contra/detection/detector.h"

#include <algorithm>

#include "contra/common/error.h"
#include "contra/gateway/endpoint.h"

namespace contra {

namespace {

std::string WithHumanPrefix(std::span<const Utterance> turns, std::size_t k) {
  if (k > 0 && turns[k - 1].speaker == Speaker::kHuman) {
    return turns[k - 1].text + " " + turns[k].text;
  }
  return turns[k].text;
}

std::string EncodeHistory(std::span<const Utterance> turns) {
  std::string out;
  for (const Utterance &u : turns) {
    if (!out.empty()) out.push_back(' ');
    out += u.speaker == Speaker::kBot ? "[B] " : "[H] ";
    out += u.text;
  }
  return out;
}

PredictionRecord Decide(const DetectionExample &example,
                        std::vector<double> pair_scores,
                        const DetectionConfig &config) {
  for (double s : pair_scores) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw InvalidArgument("scorer returned " + std::to_string(s) +
                            " outside [0, 1] for " + example.id);
    }
  }
  PredictionRecord record;
  record.id = example.id;
  record.pair_scores = std::move(pair_scores);
  ApplyDecision(&record, config.eta, config.mode);
  return record;
}

void RequireTrailingBot(const DetectionExample &example) {
  if (example.turns.empty() || example.turns.back().speaker != Speaker::kBot) {
    throw InvalidArgument("example " + example.id +
                          " does not end in a bot turn");
  }
}

}  // namespace

void DetectionConfig::Validate() const {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw InvalidArgument("eta must lie in (0, 1)");
  }
}

std::vector<TextPair> MakePairs(const DetectionExample &example,
                                DetectionMode mode) {
  RequireTrailingBot(example);
  const std::span<const Utterance> turns(example.turns);
  const std::size_t last = turns.size() - 1;
  std::vector<TextPair> pairs;
  if (mode == DetectionMode::kUnstructured) {
    pairs.push_back(TextPair{EncodeHistory(turns.first(last)), turns[last].text});
    return pairs;
  }
  const bool concat = mode == DetectionMode::kSubConcat;
  const std::string hypothesis =
      concat ? WithHumanPrefix(turns, last) : turns[last].text;
  for (std::size_t k = 0; k < last; ++k) {
    if (turns[k].speaker != Speaker::kBot) continue;
    pairs.push_back(TextPair{concat ? WithHumanPrefix(turns, k) : turns[k].text,
                             hypothesis});
  }
  return pairs;
}

PredictionRecord Detect(const DetectionExample &example, PairScorer &scorer,
                        const DetectionConfig &config) {
  config.Validate();
  const std::vector<TextPair> pairs = MakePairs(example, config.mode);
  std::vector<double> scores =
      pairs.empty() ? std::vector<double>{} : scorer.ScorePairs(pairs);
  if (scores.size() != pairs.size()) {
    throw InvalidArgument("scorer returned " + std::to_string(scores.size()) +
                          " scores for " + std::to_string(pairs.size()) +
                          " pairs");
  }
  return Decide(example, std::move(scores), config);
}

PredictionRecord DetectWithRewriting(const DetectionExample &example,
                                     const RewriterKind &rewriter,
                                     PairScorer &scorer,
                                     const DetectionConfig &config,
                                     std::size_t max_context) {
  return Detect(RewriteDialogueBots(example, rewriter, max_context), scorer,
                config);
}

CorpusPredictions ScoreCorpus(std::span<const DetectionExample> examples,
                              PairScorer &scorer, const DetectionConfig &config,
                              const ScoreCorpusOptions &options) {
  config.Validate();
  CorpusPredictions out;
  const std::size_t step = std::max<std::size_t>(1, options.examples_per_call);

  auto record_failure = [&](std::size_t index, const std::exception &e,
                            bool remote) {
    out.failures.push_back(
        ExampleFailure{index, examples[index].id, e.what(), remote});
  };

  for (std::size_t begin = 0; begin < examples.size(); begin += step) {
    const std::size_t end = std::min(examples.size(), begin + step);
    std::vector<std::vector<TextPair>> per_example(end - begin);
    std::vector<TextPair> flat;
    std::vector<bool> usable(end - begin, true);
    for (std::size_t i = begin; i < end; ++i) {
      try {
        per_example[i - begin] = MakePairs(examples[i], config.mode);
      } catch (const std::exception &e) {
        record_failure(i, e, false);
        usable[i - begin] = false;
        continue;
      }
      flat.insert(flat.end(), per_example[i - begin].begin(),
                  per_example[i - begin].end());
    }

    std::vector<double> scores;
    bool batch_ok = true;
    try {
      if (!flat.empty()) scores = scorer.ScorePairs(flat);
      batch_ok = scores.size() == flat.size();
    } catch (const std::exception &) {
      batch_ok = false;
    }

    std::size_t offset = 0;
    for (std::size_t i = begin; i < end; ++i) {
      if (!usable[i - begin]) continue;
      const std::size_t n = per_example[i - begin].size();
      try {
        std::vector<double> mine;
        if (batch_ok) {
          mine.assign(scores.begin() + offset, scores.begin() + offset + n);
        } else if (n > 0) {
          mine = scorer.ScorePairs(per_example[i - begin]);
          if (mine.size() != n) throw InvalidArgument("scorer length mismatch");
        }
        out.records.push_back(Decide(examples[i], std::move(mine), config));
        out.pairs_scored += n;
      } catch (const GatewayError &e) {
        record_failure(i, e, true);
      } catch (const std::exception &e) {
        record_failure(i, e, false);
      }
      offset += n;
    }
  }
  return out;
}

CorpusPredictions ScoreCorpusWithRewriting(
    std::span<const DetectionExample> examples, const RewriterKind &rewriter,
    const BatchRewriteOptions &rewrite_options, ResponseCache *cache,
    PairScorer &scorer, const DetectionConfig &config,
    const ScoreCorpusOptions &options) {
  const std::vector<DetectionExample> rewritten =
      BatchRewrite(examples, rewriter, rewrite_options, cache);
  return ScoreCorpus(rewritten, scorer, config, options);
}

}  // namespace contra
