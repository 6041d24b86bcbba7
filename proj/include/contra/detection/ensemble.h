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

#ifndef CONTRA_DETECTION_ENSEMBLE_H_
#define CONTRA_DETECTION_ENSEMBLE_H_

#include <span>
#include <vector>

#include "contra/core/types.h"
#include "contra/detection/decision.h"

namespace contra {

// Averages member predictions for one example. Pair scores are averaged
// elementwise and score, label and evidence are re-derived at eta. Members
// without pair scores (all of them, or none) have their example scores
// averaged instead. When every member is identical the result equals the
// member bit-for-bit.
//
// Throws InvalidArgument on an empty input, mismatched ids or mismatched
// pair_scores lengths.
PredictionRecord Ensemble(std::span<const PredictionRecord> members,
                          double eta = kDefaultEta,
                          DetectionMode mode = DetectionMode::kSub);

// Ensemble() over k prediction corpora. Records are matched by id; the output
// follows the first corpus' order. Every corpus must cover the same ids.
std::vector<PredictionRecord> EnsembleCorpora(
    std::span<const std::vector<PredictionRecord>> corpora,
    double eta = kDefaultEta, DetectionMode mode = DetectionMode::kSub);

}  // namespace contra

#endif  // CONTRA_DETECTION_ENSEMBLE_H_
