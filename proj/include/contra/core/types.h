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

#ifndef CONTRA_CORE_TYPES_H_
#define CONTRA_CORE_TYPES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace contra {

enum class Speaker { kHuman, kBot };

// "human" / "bot".
std::string_view SpeakerName(Speaker speaker);
std::optional<Speaker> ParseSpeaker(std::string_view name);

struct Utterance {
  Speaker speaker = Speaker::kHuman;
  std::string text;
  // Position in the containing turn list.
  std::size_t turn_index = 0;

  bool operator==(const Utterance &) const = default;
};

// Reassigns turn_index to match list positions.
void Renumber(std::vector<Utterance> *turns);

struct Dialogue {
  std::string id;
  std::vector<Utterance> turns;

  bool operator==(const Dialogue &) const = default;
};

// A dialogue prefix ending in the bot utterance under test. Evidence indices
// are 1-based over the bot turns that precede the last one.
struct DetectionExample {
  std::string id;
  std::vector<Utterance> turns;
  std::optional<int> gold_label;
  std::optional<std::vector<int>> gold_evidence;

  bool operator==(const DetectionExample &) const = default;
};

struct PredictionRecord {
  std::string id;
  double score = 0.0;
  int label = 0;
  std::vector<int> evidence;
  // One score per prior bot turn (sub modes) or a single score (unstructured).
  std::vector<double> pair_scores;

  bool operator==(const PredictionRecord &) const = default;
};

struct RewriteFlags {
  bool is_incomplete = false;
  bool has_coreference = false;
  bool has_ellipsis = false;

  bool operator==(const RewriteFlags &) const = default;
};

struct HumanEval {
  bool correct = false;
  bool complete = false;

  bool operator==(const HumanEval &) const = default;
};

struct RewriteExample {
  std::string id;
  std::vector<Utterance> context;
  Utterance target;
  std::vector<std::string> references;
  std::optional<std::string> hypothesis;
  std::optional<RewriteFlags> flags;
  std::optional<HumanEval> human_eval;

  bool operator==(const RewriteExample &) const = default;
};

}  // namespace contra

#endif  // CONTRA_CORE_TYPES_H_
