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

#include "contra/core/validate.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "contra/common/text.h"
#include "contra/core/dialogue.h"

namespace contra {

namespace {

class Collector {
 public:
  explicit Collector(const std::string &id) : id_(id) {}

  void Add(std::string path, std::string message) {
    out_.push_back(Violation{id_, 0, std::move(path), std::move(message)});
  }
  std::vector<Violation> Take() { return std::move(out_); }

 private:
  const std::string &id_;
  std::vector<Violation> out_;
};

std::string Indexed(const std::string &field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

void CheckId(const std::string &id, Collector *c) {
  if (id.empty()) c->Add("id", "must be non-empty");
}

void CheckTurns(const std::vector<Utterance> &turns, const std::string &field,
                Collector *c) {
  for (std::size_t i = 0; i < turns.size(); ++i) {
    if (text::IsBlank(turns[i].text)) {
      c->Add(Indexed(field, i) + ".text", "must be non-empty after trimming");
    }
    if (turns[i].turn_index != i) {
      c->Add(Indexed(field, i) + ".turn_index",
             "must equal position " + std::to_string(i));
    }
  }
}

// Evidence is a set of 1-based indices in [1, limit].
void CheckEvidence(const std::vector<int> &evidence, std::size_t limit,
                   const std::string &field, Collector *c) {
  std::set<int> seen;
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    const int k = evidence[i];
    if (k < 1 || static_cast<std::size_t>(k) > limit) {
      c->Add(Indexed(field, i), "index " + std::to_string(k) +
                                    " outside [1, " + std::to_string(limit) +
                                    "]");
    }
    if (!seen.insert(k).second) {
      c->Add(Indexed(field, i), "duplicate index " + std::to_string(k));
    }
  }
}

bool IsProbability(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

template <typename Record>
std::vector<Violation> ValidateAll(std::span<const Record> records) {
  std::vector<Violation> out;
  std::unordered_map<std::string, std::size_t> first_seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (Violation &v : ValidateRecord(records[i])) {
      v.record_index = i;
      out.push_back(std::move(v));
    }
    auto [it, inserted] = first_seen.emplace(records[i].id, i);
    if (!inserted) {
      out.push_back(Violation{records[i].id, i, "id",
                              "duplicate id (first at record " +
                                  std::to_string(it->second) + ")"});
    }
  }
  return out;
}

}  // namespace

std::string Violation::ToString() const {
  std::string s = "record " + std::to_string(record_index);
  if (!record_id.empty()) s += " (" + record_id + ")";
  if (!field_path.empty()) s += " " + field_path;
  return s + ": " + message;
}

std::vector<Violation> ValidateRecord(const Dialogue &d) {
  Collector c(d.id);
  CheckId(d.id, &c);
  if (d.turns.empty()) c.Add("turns", "must contain at least one turn");
  CheckTurns(d.turns, "turns", &c);
  return c.Take();
}

std::vector<Violation> ValidateRecord(const DetectionExample &e) {
  Collector c(e.id);
  CheckId(e.id, &c);
  if (e.turns.empty()) {
    c.Add("turns", "must contain at least one turn");
  } else if (e.turns.back().speaker != Speaker::kBot) {
    c.Add(Indexed("turns", e.turns.size() - 1) + ".speaker",
          "last turn must be a bot turn");
  }
  CheckTurns(e.turns, "turns", &c);
  if (e.gold_label && *e.gold_label != 0 && *e.gold_label != 1) {
    c.Add("label", "must be 0 or 1");
  }
  if (e.gold_evidence) {
    CheckEvidence(*e.gold_evidence, PriorBotTurnCount(e.turns), "evidence", &c);
    if (e.gold_label) {
      const bool positive = *e.gold_label == 1;
      if (positive && e.gold_evidence->empty()) {
        c.Add("evidence", "must be non-empty when label is 1");
      } else if (!positive && !e.gold_evidence->empty()) {
        c.Add("evidence", "must be empty when label is 0");
      }
    }
  }
  return c.Take();
}

std::vector<Violation> ValidateRecord(const PredictionRecord &p) {
  Collector c(p.id);
  CheckId(p.id, &c);
  if (!IsProbability(p.score)) c.Add("score", "must be in [0, 1]");
  if (p.label != 0 && p.label != 1) c.Add("label", "must be 0 or 1");
  for (std::size_t i = 0; i < p.pair_scores.size(); ++i) {
    if (!IsProbability(p.pair_scores[i])) {
      c.Add(Indexed("pair_scores", i), "must be in [0, 1]");
    }
  }
  if (!p.pair_scores.empty()) {
    const double max_score =
        *std::max_element(p.pair_scores.begin(), p.pair_scores.end());
    if (p.score != max_score) c.Add("score", "must equal max(pair_scores)");
  }
  CheckEvidence(p.evidence, p.pair_scores.size(), "evidence", &c);
  return c.Take();
}

std::vector<Violation> ValidateRecord(const RewriteExample &r) {
  Collector c(r.id);
  CheckId(r.id, &c);
  CheckTurns(r.context, "context", &c);
  if (text::IsBlank(r.target.text)) {
    c.Add("target.text", "must be non-empty after trimming");
  }
  if (r.target.turn_index != r.context.size()) {
    c.Add("target.turn_index", "must follow the context");
  }
  if (r.references.empty() || r.references.size() > 2) {
    c.Add("references", "must hold 1 or 2 rewrites");
  }
  for (std::size_t i = 0; i < r.references.size(); ++i) {
    if (text::IsBlank(r.references[i])) {
      c.Add(Indexed("references", i), "must be non-empty after trimming");
    }
  }
  return c.Take();
}

std::vector<Violation> ValidateCorpus(std::span<const Dialogue> records) {
  return ValidateAll(records);
}
std::vector<Violation> ValidateCorpus(
    std::span<const DetectionExample> records) {
  return ValidateAll(records);
}
std::vector<Violation> ValidateCorpus(
    std::span<const PredictionRecord> records) {
  return ValidateAll(records);
}
std::vector<Violation> ValidateCorpus(std::span<const RewriteExample> records) {
  return ValidateAll(records);
}

}  // namespace contra
