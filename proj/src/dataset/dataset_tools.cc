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

#include "contra/dataset/dataset_tools.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "contra/common/error.h"
#include "contra/core/dialogue.h"
#include "contra/core/records_io.h"

namespace contra {

namespace {

bool SameTurn(const Utterance &a, const Utterance &b) {
  return a.speaker == b.speaker && a.text == b.text;
}

bool TurnLess(const Utterance &a, const Utterance &b) {
  if (a.speaker != b.speaker) return a.speaker < b.speaker;
  return a.text < b.text;
}

// a is a prefix of b (possibly equal).
bool IsPrefix(const std::vector<Utterance> &a, const std::vector<Utterance> &b) {
  return a.size() <= b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), SameTurn);
}

std::vector<int> Normalized(std::vector<int> evidence) {
  std::sort(evidence.begin(), evidence.end());
  evidence.erase(std::unique(evidence.begin(), evidence.end()), evidence.end());
  return evidence;
}

void CheckVote(const AnnotationVote &v) {
  if (v.label != 0 && v.label != 1) {
    throw InvalidArgument("vote by " + v.annotator_id + " has label " +
                          std::to_string(v.label));
  }
  if (v.label == 0 && !v.evidence.empty()) {
    throw InvalidArgument("vote by " + v.annotator_id +
                          " carries evidence with label 0");
  }
  for (int e : v.evidence) {
    if (e < 1) {
      throw InvalidArgument("vote by " + v.annotator_id +
                            " has evidence index " + std::to_string(e));
    }
  }
}

void CheckRound(std::span<const AnnotationVote> votes, const char *name) {
  if (votes.size() != 3) {
    throw InvalidArgument(std::string(name) + " needs exactly 3 votes, got " +
                          std::to_string(votes.size()));
  }
  for (const AnnotationVote &v : votes) CheckVote(v);
}

AdjudicationState Finalized(const AnnotationVote &v) {
  return AdjudicationState{AdjudicationState::Kind::kFinalized, v.label,
                           Normalized(v.evidence)};
}

}  // namespace

std::vector<Dialogue> MergeOverlapping(std::span<const Dialogue> dialogues) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < dialogues.size(); ++i) {
    if (dialogues[i].turns.size() > 2) order.push_back(i);
  }
  // After a lexicographic sort, anything having A as a strict prefix sorts
  // right after A and its duplicates, so one look past the run of equals is
  // enough.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const auto &ta = dialogues[a].turns;
                     const auto &tb = dialogues[b].turns;
                     return std::lexicographical_compare(
                         ta.begin(), ta.end(), tb.begin(), tb.end(), TurnLess);
                   });
  std::vector<bool> keep(dialogues.size(), false);
  for (std::size_t run = 0; run < order.size();) {
    const auto &turns = dialogues[order[run]].turns;
    std::size_t next = run + 1;
    while (next < order.size() &&
           dialogues[order[next]].turns.size() == turns.size() &&
           IsPrefix(turns, dialogues[order[next]].turns)) {
      ++next;
    }
    const bool covered =
        next < order.size() && IsPrefix(turns, dialogues[order[next]].turns);
    // The stable sort keeps the earliest duplicate at the head of the run.
    if (!covered) keep[order[run]] = true;
    run = next;
  }
  std::vector<Dialogue> out;
  for (std::size_t i = 0; i < dialogues.size(); ++i) {
    if (keep[i]) out.push_back(dialogues[i]);
  }
  return out;
}

std::vector<DetectionExample> PrefixCut(const Dialogue &dialogue) {
  std::vector<DetectionExample> out;
  int k = 0;
  for (std::size_t end : BotTurnIndices(dialogue)) {
    DetectionExample ex;
    ex.id = dialogue.id + "#" + std::to_string(++k);
    ex.turns.assign(dialogue.turns.begin(), dialogue.turns.begin() + end + 1);
    Renumber(&ex.turns);
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<DetectionExample> PrefixCutCorpus(std::span<const Dialogue> corpus) {
  std::vector<DetectionExample> out;
  for (const Dialogue &d : corpus) {
    std::vector<DetectionExample> cuts = PrefixCut(d);
    std::move(cuts.begin(), cuts.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<DetectionExample> BalancedSample(
    std::span<const DetectionExample> examples, std::uint64_t seed) {
  std::vector<std::size_t> positives, negatives;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    if (!examples[i].gold_label) {
      throw InvalidArgument("example " + examples[i].id + " has no label");
    }
    (*examples[i].gold_label == 1 ? positives : negatives).push_back(i);
  }
  if (negatives.size() < positives.size()) {
    throw InvalidArgument("cannot balance: " + std::to_string(positives.size()) +
                          " positives but only " +
                          std::to_string(negatives.size()) + " negatives");
  }
  Lcg64 rng(seed);
  LcgShuffle(&negatives, &rng);
  negatives.resize(positives.size());
  std::sort(negatives.begin(), negatives.end());

  std::vector<DetectionExample> out;
  out.reserve(2 * positives.size());
  for (std::size_t i : positives) out.push_back(examples[i]);
  for (std::size_t i : negatives) out.push_back(examples[i]);
  return out;
}

std::string_view AdjudicationKindName(AdjudicationState::Kind kind) {
  switch (kind) {
    case AdjudicationState::Kind::kFinalized:
      return "finalized";
    case AdjudicationState::Kind::kEscalatedRound2:
      return "escalated_round2";
    case AdjudicationState::Kind::kNeedsAdjudication:
      return "needs_adjudication";
  }
  return "needs_adjudication";
}

bool Unanimous(std::span<const AnnotationVote> votes) {
  if (votes.empty()) return false;
  const std::vector<int> first = Normalized(votes.front().evidence);
  for (const AnnotationVote &v : votes) {
    if (v.label != votes.front().label) return false;
    if (Normalized(v.evidence) != first) return false;
  }
  return true;
}

std::vector<int> MaximumEvidence(std::span<const AnnotationVote> votes) {
  std::vector<int> all;
  for (const AnnotationVote &v : votes) {
    all.insert(all.end(), v.evidence.begin(), v.evidence.end());
  }
  return Normalized(std::move(all));
}

AdjudicationState Adjudicate(
    std::span<const AnnotationVote> round1,
    std::optional<std::span<const AnnotationVote>> round2,
    const std::optional<AnnotationVote> &adjudicator) {
  CheckRound(round1, "round 1");
  if (Unanimous(round1)) return Finalized(round1.front());
  if (!round2) return {AdjudicationState::Kind::kEscalatedRound2, 0, {}};
  CheckRound(*round2, "round 2");
  if (Unanimous(*round2)) return Finalized(round2->front());
  if (!adjudicator) return {AdjudicationState::Kind::kNeedsAdjudication, 0, {}};
  CheckVote(*adjudicator);
  return Finalized(*adjudicator);
}

std::vector<VoteRecord> ParseVotes(std::string_view text) {
  std::vector<VoteRecord> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    auto fail = [&](const std::string &field, const std::string &msg) {
      throw ValidationError(line_no, field, msg);
    };
    Json j = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) fail("", "not a JSON object");

    VoteRecord rec;
    auto id = j.find("id");
    if (id == j.end() || !id->is_string()) fail("id", "expected a string");
    rec.id = id->get<std::string>();

    auto round = j.find("round");
    if (round == j.end()) fail("round", "missing required field");
    if (round->is_string() && round->get<std::string>() == "adjudicator") {
      rec.round = kAdjudicatorRound;
    } else if (round->is_number_integer() &&
               (round->get<int>() == 1 || round->get<int>() == 2)) {
      rec.round = round->get<int>();
    } else {
      fail("round", "expected 1, 2 or \"adjudicator\"");
    }

    auto annotator = j.find("annotator_id");
    if (annotator == j.end() || !annotator->is_string()) {
      fail("annotator_id", "expected a string");
    }
    rec.vote.annotator_id = annotator->get<std::string>();

    auto label = j.find("label");
    if (label == j.end() || !label->is_number_integer() ||
        (label->get<int>() != 0 && label->get<int>() != 1)) {
      fail("label", "expected 0 or 1");
    }
    rec.vote.label = label->get<int>();

    auto evidence = j.find("evidence");
    if (evidence != j.end()) {
      if (!evidence->is_array()) fail("evidence", "expected an array");
      for (std::size_t i = 0; i < evidence->size(); ++i) {
        const Json &e = (*evidence)[i];
        if (!e.is_number_integer() || e.get<long long>() < 1) {
          fail("evidence[" + std::to_string(i) + "]",
               "expected a positive integer");
        }
        rec.vote.evidence.push_back(e.get<int>());
      }
    }
    if (rec.vote.label == 0 && !rec.vote.evidence.empty()) {
      fail("evidence", "must be empty when label is 0");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<AdjudicationOutcome> AdjudicateVotes(
    std::span<const VoteRecord> votes) {
  struct Group {
    std::vector<AnnotationVote> rounds[2];
    std::vector<AnnotationVote> adjudicators;
  };
  std::vector<std::string> order;
  std::unordered_map<std::string, Group> groups;
  for (const VoteRecord &v : votes) {
    auto [it, inserted] = groups.try_emplace(v.id);
    if (inserted) order.push_back(v.id);
    if (v.round == kAdjudicatorRound) {
      it->second.adjudicators.push_back(v.vote);
    } else {
      it->second.rounds[v.round - 1].push_back(v.vote);
    }
  }

  std::vector<AdjudicationOutcome> out;
  out.reserve(order.size());
  for (const std::string &id : order) {
    const Group &g = groups.at(id);
    auto fail = [&](const std::string &msg) {
      throw ValidationError(0, "id", id + ": " + msg);
    };
    if (g.rounds[0].size() != 3) {
      fail("round 1 has " + std::to_string(g.rounds[0].size()) +
           " votes, expected 3");
    }
    if (!g.rounds[1].empty() && g.rounds[1].size() != 3) {
      fail("round 2 has " + std::to_string(g.rounds[1].size()) +
           " votes, expected 3");
    }
    if (g.adjudicators.size() > 1) fail("more than one adjudicator vote");

    std::optional<std::span<const AnnotationVote>> round2;
    if (!g.rounds[1].empty()) round2 = std::span<const AnnotationVote>(g.rounds[1]);
    std::optional<AnnotationVote> adjudicator;
    if (!g.adjudicators.empty()) adjudicator = g.adjudicators.front();
    out.push_back({id, Adjudicate(g.rounds[0], round2, adjudicator)});
  }
  return out;
}

std::vector<DetectionExample> ApplyAdjudication(
    std::span<const DetectionExample> examples,
    std::span<const AdjudicationOutcome> outcomes) {
  std::unordered_map<std::string, const AdjudicationState *> by_id;
  for (const AdjudicationOutcome &o : outcomes) by_id[o.id] = &o.state;
  std::vector<DetectionExample> out;
  for (const DetectionExample &ex : examples) {
    auto it = by_id.find(ex.id);
    if (it == by_id.end() ||
        it->second->kind != AdjudicationState::Kind::kFinalized) {
      continue;
    }
    DetectionExample labeled = ex;
    labeled.gold_label = it->second->label;
    labeled.gold_evidence = it->second->evidence;
    out.push_back(std::move(labeled));
  }
  return out;
}

}  // namespace contra
