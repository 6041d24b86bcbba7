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

#include "contra/detection/decision.h"

#include <algorithm>

namespace contra {

std::string_view ModeName(DetectionMode mode) {
  switch (mode) {
    case DetectionMode::kSub:
      return "sub";
    case DetectionMode::kSubConcat:
      return "sub-concat";
    case DetectionMode::kUnstructured:
      return "unstructured";
  }
  return "sub";
}

std::optional<DetectionMode> ParseMode(std::string_view name) {
  if (name == "sub") return DetectionMode::kSub;
  if (name == "sub-concat" || name == "sub_concat") return DetectionMode::kSubConcat;
  if (name == "unstructured") return DetectionMode::kUnstructured;
  return std::nullopt;
}

void ApplyDecision(PredictionRecord *record, double eta, DetectionMode mode) {
  const auto &scores = record->pair_scores;
  record->score =
      scores.empty() ? 0.0 : *std::max_element(scores.begin(), scores.end());
  // Strict inequality for both the label and the evidence keeps
  // label == 1 <=> evidence non-empty in the sub modes.
  record->label = record->score > eta ? 1 : 0;
  record->evidence.clear();
  if (mode == DetectionMode::kUnstructured) return;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] > eta) record->evidence.push_back(static_cast<int>(i + 1));
  }
}

}  // namespace contra
