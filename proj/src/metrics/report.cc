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

#include "contra/metrics/report.h"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <vector>

namespace contra {

namespace {

Json OptionalNumber(const std::optional<double> &v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string Percent(const std::optional<double> &v) {
  return v ? Fixed(100.0 * *v, 1) : std::string("-");
}

std::string OneDecimal(const std::optional<double> &v) {
  return v ? Fixed(*v, 1) : std::string("-");
}

// First column left-aligned, the rest right-aligned, two spaces apart.
std::string Render(const std::vector<std::vector<std::string>> &cells) {
  std::vector<std::size_t> width;
  for (const auto &row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto &row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      if (c > 0) line += "  ";
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace

Json ReportToJson(const RewriteEvalReport &r) {
  Json j = Json::object();
  j["bleu"] = r.bleu;
  j["rouge1"] = r.rouge1;
  j["rougeL"] = r.rougeL;
  j["em"] = r.em;
  j["restoration_f1"] = r.restoration_f1;
  j["change_rate"] = r.change_rate;
  j["restoration_precision"] = r.restoration_precision;
  j["restoration_recall"] = r.restoration_recall;
  j["restoration_n"] = r.restoration_n;
  j["counts"] = {{"items", r.items}, {"references", r.references}};
  return j;
}

Json ReportToJson(const DetectionEvalReport &r) {
  Json j = Json::object();
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  j["aupr"] = OptionalNumber(r.aupr);
  j["se_precision"] = r.se_precision;
  j["se_recall"] = r.se_recall;
  j["se_f1"] = r.se_f1;
  j["joint_accuracy"] = r.joint_accuracy;
  j["accuracy"] = r.accuracy;
  j["counts"] = {{"tp", r.counts.tp},
                 {"fp", r.counts.fp},
                 {"fn", r.counts.fn},
                 {"tn", r.counts.tn},
                 {"examples", r.examples}};
  return j;
}

Json ReportToJson(const HumanEvalSummary &s) {
  Json j = Json::object();
  j["correct"] = OptionalNumber(s.correct);
  j["complete"] = OptionalNumber(s.complete);
  j["coreference"] = OptionalNumber(s.coreference);
  j["ellipsis"] = OptionalNumber(s.ellipsis);
  j["incomplete"] = OptionalNumber(s.incomplete);
  j["counts"] = {{"judged", s.judged}, {"flagged", s.flagged}};
  return j;
}

std::string FormatRewriteTable(
    std::span<const std::pair<std::string, RewriteEvalReport>> rows) {
  std::vector<std::vector<std::string>> cells = {
      {"Model", "BLEU", "R-1", "R-L", "EM", "F1", "Change"}};
  for (const auto &[name, r] : rows) {
    cells.push_back({name, Fixed(r.bleu, 3), Fixed(r.rouge1, 3),
                     Fixed(r.rougeL, 3), Fixed(r.em, 3),
                     Fixed(r.restoration_f1, 3), Fixed(r.change_rate, 3)});
  }
  return Render(cells);
}

std::string FormatDetectionTable(
    std::span<const std::pair<std::string, DetectionEvalReport>> rows) {
  std::vector<std::vector<std::string>> cells = {
      {"Method", "P", "R", "F1", "AUPR", "SE-P", "SE-R", "SE-F1", "Joint-Acc"}};
  for (const auto &[name, r] : rows) {
    cells.push_back({name, Percent(r.precision), Percent(r.recall),
                     Percent(r.f1), Percent(r.aupr), Percent(r.se_precision),
                     Percent(r.se_recall), Percent(r.se_f1),
                     Percent(r.joint_accuracy)});
  }
  return Render(cells);
}

std::string FormatHumanEvalTable(const HumanEvalSummary &s) {
  return Render({{"Correct", "Complete", "Coref", "Ellipsis", "Incomplete"},
                 {OneDecimal(s.correct), OneDecimal(s.complete),
                  OneDecimal(s.coreference), OneDecimal(s.ellipsis),
                  OneDecimal(s.incomplete)}});
}

}  // namespace contra
