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

#include "contra/detection/ensemble.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "contra/common/error.h"

namespace contra {

namespace {

// Left-to-right sum over k, clamped into the member range so rounding never
// escapes it. A column of equal values is returned untouched.
double Mean(std::span<const double> xs) {
  const double first = xs.front();
  double lo = first, hi = first, sum = 0.0;
  bool all_equal = true;
  for (double x : xs) {
    sum += x;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    all_equal = all_equal && x == first;
  }
  if (all_equal) return first;
  return std::clamp(sum / static_cast<double>(xs.size()), lo, hi);
}

}  // namespace

PredictionRecord Ensemble(std::span<const PredictionRecord> members,
                          double eta, DetectionMode mode) {
  if (members.empty()) throw InvalidArgument("ensemble of zero predictions");
  const PredictionRecord &head = members.front();
  for (const PredictionRecord &m : members) {
    if (m.id != head.id) {
      throw InvalidArgument("ensemble id mismatch: " + head.id + " vs " + m.id);
    }
    if (m.pair_scores.size() != head.pair_scores.size()) {
      throw InvalidArgument("ensemble pair_scores length mismatch for " +
                            head.id);
    }
  }

  PredictionRecord out;
  out.id = head.id;
  std::vector<double> column(members.size());
  if (head.pair_scores.empty()) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      column[j] = members[j].score;
    }
    out.score = Mean(column);
    out.label = out.score > eta ? 1 : 0;
    return out;
  }
  out.pair_scores.resize(head.pair_scores.size());
  for (std::size_t i = 0; i < head.pair_scores.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      column[j] = members[j].pair_scores[i];
    }
    out.pair_scores[i] = Mean(column);
  }
  ApplyDecision(&out, eta, mode);
  return out;
}

std::vector<PredictionRecord> EnsembleCorpora(
    std::span<const std::vector<PredictionRecord>> corpora, double eta,
    DetectionMode mode) {
  if (corpora.empty()) throw InvalidArgument("ensemble of zero corpora");
  const std::vector<PredictionRecord> &first = corpora.front();

  // Per corpus: id -> position.
  std::vector<std::unordered_map<std::string, std::size_t>> index(
      corpora.size());
  for (std::size_t c = 0; c < corpora.size(); ++c) {
    if (corpora[c].size() != first.size()) {
      throw InvalidArgument("prediction file " + std::to_string(c + 1) +
                            " has " + std::to_string(corpora[c].size()) +
                            " records, expected " +
                            std::to_string(first.size()));
    }
    for (std::size_t i = 0; i < corpora[c].size(); ++i) {
      if (!index[c].emplace(corpora[c][i].id, i).second) {
        throw InvalidArgument("duplicate id " + corpora[c][i].id +
                              " in prediction file " + std::to_string(c + 1));
      }
    }
  }

  std::vector<PredictionRecord> out;
  out.reserve(first.size());
  std::vector<PredictionRecord> members(corpora.size());
  for (const PredictionRecord &rec : first) {
    for (std::size_t c = 0; c < corpora.size(); ++c) {
      auto it = index[c].find(rec.id);
      if (it == index[c].end()) {
        throw InvalidArgument("id " + rec.id + " missing from prediction file " +
                              std::to_string(c + 1));
      }
      members[c] = corpora[c][it->second];
    }
    out.push_back(Ensemble(members, eta, mode));
  }
  return out;
}

}  // namespace contra
