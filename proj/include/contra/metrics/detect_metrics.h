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

#ifndef CONTRA_METRICS_DETECT_METRICS_H_
#define CONTRA_METRICS_DETECT_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "contra/core/types.h"
#include "contra/detection/decision.h"

namespace contra {

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
};

// Positive class is contradiction (1). Components with an empty denominator
// are 0.
Prf BinaryPrf(std::span<const int> gold, std::span<const int> pred,
              ConfusionCounts *counts = nullptr);

// Pairs every gold example with the prediction sharing its id. Throws
// InvalidArgument when the id sets differ or a gold label is missing.
using AlignedPair = std::pair<const DetectionExample *, const PredictionRecord *>;
std::vector<AlignedPair> AlignById(std::span<const DetectionExample> gold,
                                   std::span<const PredictionRecord> preds);

Prf BinaryPrf(std::span<const DetectionExample> gold,
              std::span<const PredictionRecord> preds);

// Micro-averaged over (example, evidence index) pairs. Predicted evidence on
// gold-negative examples counts toward the precision denominator only.
Prf EvidencePrf(std::span<const DetectionExample> gold,
                std::span<const PredictionRecord> preds);

// Correct iff the label matches and, for gold positives, the predicted
// evidence covers the gold evidence.
double JointAccuracy(std::span<const DetectionExample> gold,
                     std::span<const PredictionRecord> preds);

// Step-wise average precision. Scores are sorted descending and equal scores
// form a single cut: AP = sum_k (R_k - R_{k-1}) * P_k. Throws InvalidArgument
// when there is no positive or the lengths differ.
double Aupr(std::span<const int> gold, std::span<const double> scores);

struct DetectionEvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> aupr;  // absent when the gold set has no positive
  double se_precision = 0.0;
  double se_recall = 0.0;
  double se_f1 = 0.0;
  double joint_accuracy = 0.0;
  double accuracy = 0.0;
  ConfusionCounts counts;
  std::size_t examples = 0;
};

struct DetectionEvalOptions {
  double eta = kDefaultEta;
  DetectionMode mode = DetectionMode::kSub;
};

// Predictions carrying pair_scores are re-decided at options.eta first, so a
// single prediction file supports threshold sweeps.
DetectionEvalReport EvaluateDetection(std::span<const DetectionExample> gold,
                                      std::span<const PredictionRecord> preds,
                                      const DetectionEvalOptions &options = {});

}  // namespace contra

#endif  // CONTRA_METRICS_DETECT_METRICS_H_
