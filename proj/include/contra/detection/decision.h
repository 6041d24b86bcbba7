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

#ifndef CONTRA_DETECTION_DECISION_H_
#define CONTRA_DETECTION_DECISION_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "contra/core/types.h"

namespace contra {

inline constexpr double kDefaultEta = 0.5;

enum class DetectionMode { kSub, kSubConcat, kUnstructured };

// "sub", "sub-concat", "unstructured". Parsing also accepts "sub_concat".
std::string_view ModeName(DetectionMode mode);
std::optional<DetectionMode> ParseMode(std::string_view name);

// Fills score, label and evidence from pair_scores:
//   score    = max(pair_scores), 0 when empty
//   label    = score > eta
//   evidence = {i : pair_scores[i-1] > eta}   (sub modes only)
// Unstructured records never carry evidence.
void ApplyDecision(PredictionRecord *record, double eta, DetectionMode mode);

}  // namespace contra

#endif  // CONTRA_DETECTION_DECISION_H_
