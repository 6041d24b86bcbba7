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

#ifndef CONTRA_METRICS_REPORT_H_
#define CONTRA_METRICS_REPORT_H_

#include <span>
#include <string>
#include <utility>

#include "contra/core/records_io.h"
#include "contra/metrics/detect_metrics.h"
#include "contra/metrics/rewrite_metrics.h"

namespace contra {

// Machine-readable reports. Metric fields hold fractions in [0, 1], except
// the human-evaluation summary, which holds percentages.
Json ReportToJson(const RewriteEvalReport &report);
Json ReportToJson(const DetectionEvalReport &report);
Json ReportToJson(const HumanEvalSummary &summary);

// Aligned plain-text tables, one row per (name, report), newline-terminated.
// Rewriting: BLEU R-1 R-L EM F1 Change as fractions with three decimals.
// Detection: P R F1 AUPR SE-P SE-R SE-F1 Joint-Acc as percentages with one
// decimal; a missing AUPR prints as "-".
std::string FormatRewriteTable(
    std::span<const std::pair<std::string, RewriteEvalReport>> rows);
std::string FormatDetectionTable(
    std::span<const std::pair<std::string, DetectionEvalReport>> rows);
// Correct Complete Coref Ellipsis Incomplete; the summary already holds
// percentages.
std::string FormatHumanEvalTable(const HumanEvalSummary &summary);

}  // namespace contra

#endif  // CONTRA_METRICS_REPORT_H_
