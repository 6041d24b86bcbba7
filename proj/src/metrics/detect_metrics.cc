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

#include "contra/metrics/detect_metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "contra/common/error.h"

namespace contra {

namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double F1(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

const std::vector<int> &GoldEvidence(const DetectionExample &e) {
  static const std::vector<int> kEmpty;
  return e.gold_evidence ? *e.gold_evidence : kEmpty;
}

struct EvidenceTally {
  std::size_t matched = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;
};

EvidenceTally TallyEvidence(const std::vector<AlignedPair> &aligned) {
  EvidenceTally t;
  for (const auto &[gold, pred] : aligned) {
    const std::set<int> predicted(pred->evidence.begin(), pred->evidence.end());
    t.predicted += predicted.size();
    if (*gold->gold_label != 1) continue;
    const std::set<int> expected(GoldEvidence(*gold).begin(),
                                 GoldEvidence(*gold).end());
    t.gold += expected.size();
    for (int k : predicted) t.matched += expected.count(k);
  }
  return t;
}

bool Covers(const std::vector<int> &predicted, const std::vector<int> &gold) {
  const std::set<int> have(predicted.begin(), predicted.end());
  return std::all_of(gold.begin(), gold.end(),
                     [&](int k) { return have.count(k) > 0; });
}

bool JointCorrect(const DetectionExample &gold, const PredictionRecord &pred) {
  if (pred.label != *gold.gold_label) return false;
  return *gold.gold_label == 0 || Covers(pred.evidence, GoldEvidence(gold));
}

}  // namespace

Prf BinaryPrf(std::span<const int> gold, std::span<const int> pred,
              ConfusionCounts *counts) {
  if (gold.size() != pred.size()) {
    throw InvalidArgument("gold and predicted labels differ in length");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool g = gold[i] == 1;
    const bool p = pred[i] == 1;
    if (g && p) ++c.tp;
    else if (!g && p) ++c.fp;
    else if (g && !p) ++c.fn;
    else ++c.tn;
  }
  if (counts != nullptr) *counts = c;
  Prf out;
  out.precision = Ratio(c.tp, c.tp + c.fp);
  out.recall = Ratio(c.tp, c.tp + c.fn);
  out.f1 = F1(out.precision, out.recall);
  return out;
}

std::vector<AlignedPair> AlignById(std::span<const DetectionExample> gold,
                                   std::span<const PredictionRecord> preds) {
  std::unordered_map<std::string, const PredictionRecord *> by_id;
  for (const PredictionRecord &p : preds) {
    if (!by_id.emplace(p.id, &p).second) {
      throw InvalidArgument("duplicate prediction id " + p.id);
    }
  }
  if (by_id.size() != gold.size()) {
    throw InvalidArgument("gold has " + std::to_string(gold.size()) +
                          " examples but predictions have " +
                          std::to_string(by_id.size()));
  }
  std::vector<AlignedPair> aligned;
  aligned.reserve(gold.size());
  for (const DetectionExample &g : gold) {
    if (!g.gold_label) throw InvalidArgument("gold example " + g.id + " has no label");
    auto it = by_id.find(g.id);
    if (it == by_id.end()) throw InvalidArgument("no prediction for id " + g.id);
    aligned.emplace_back(&g, it->second);
  }
  return aligned;
}

Prf BinaryPrf(std::span<const DetectionExample> gold,
              std::span<const PredictionRecord> preds) {
  std::vector<int> g, p;
  for (const auto &[ge, pr] : AlignById(gold, preds)) {
    g.push_back(*ge->gold_label);
    p.push_back(pr->label);
  }
  return BinaryPrf(g, p);
}

Prf EvidencePrf(std::span<const DetectionExample> gold,
                std::span<const PredictionRecord> preds) {
  const EvidenceTally t = TallyEvidence(AlignById(gold, preds));
  Prf out;
  out.precision = Ratio(t.matched, t.predicted);
  out.recall = Ratio(t.matched, t.gold);
  out.f1 = F1(out.precision, out.recall);
  return out;
}

double JointAccuracy(std::span<const DetectionExample> gold,
                     std::span<const PredictionRecord> preds) {
  const auto aligned = AlignById(gold, preds);
  if (aligned.empty()) throw InvalidArgument("empty corpus");
  std::size_t correct = 0;
  for (const auto &[g, p] : aligned) correct += JointCorrect(*g, *p) ? 1 : 0;
  return Ratio(correct, aligned.size());
}

double Aupr(std::span<const int> gold, std::span<const double> scores) {
  if (gold.size() != scores.size()) {
    throw InvalidArgument("labels and scores differ in length");
  }
  const auto positives =
      static_cast<std::size_t>(std::count(gold.begin(), gold.end(), 1));
  if (positives == 0) throw InvalidArgument("AUPR is undefined without positives");
  for (double s : scores) {
    if (std::isnan(s)) throw InvalidArgument("AUPR over a NaN score");
  }

  std::vector<std::size_t> order(gold.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });

  double ap = 0.0;
  std::size_t tp = 0, seen = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t group_tp = 0, j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      group_tp += gold[order[j]] == 1 ? 1 : 0;
      ++j;
    }
    tp += group_tp;
    seen += j - i;
    if (group_tp > 0) {
      ap += (static_cast<double>(group_tp) / static_cast<double>(positives)) *
            (static_cast<double>(tp) / static_cast<double>(seen));
    }
    i = j;
  }
  return ap;
}

DetectionEvalReport EvaluateDetection(std::span<const DetectionExample> gold,
                                      std::span<const PredictionRecord> preds,
                                      const DetectionEvalOptions &options) {
  std::vector<PredictionRecord> decided(preds.begin(), preds.end());
  for (PredictionRecord &p : decided) {
    if (!p.pair_scores.empty()) ApplyDecision(&p, options.eta, options.mode);
  }
  const auto aligned = AlignById(gold, decided);
  if (aligned.empty()) throw InvalidArgument("empty corpus");

  DetectionEvalReport report;
  report.examples = aligned.size();
  std::vector<int> g, p;
  std::vector<double> scores;
  std::size_t joint = 0;
  for (const auto &[ge, pr] : aligned) {
    g.push_back(*ge->gold_label);
    p.push_back(pr->label);
    scores.push_back(pr->score);
    joint += JointCorrect(*ge, *pr) ? 1 : 0;
  }
  const Prf binary = BinaryPrf(g, p, &report.counts);
  report.precision = binary.precision;
  report.recall = binary.recall;
  report.f1 = binary.f1;
  report.accuracy = Ratio(report.counts.tp + report.counts.tn, report.examples);
  if (std::count(g.begin(), g.end(), 1) > 0) report.aupr = Aupr(g, scores);

  const EvidenceTally t = TallyEvidence(aligned);
  report.se_precision = Ratio(t.matched, t.predicted);
  report.se_recall = Ratio(t.matched, t.gold);
  report.se_f1 = F1(report.se_precision, report.se_recall);
  report.joint_accuracy = Ratio(joint, report.examples);
  return report;
}

}  // namespace contra
