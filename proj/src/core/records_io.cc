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

#include "contra/core/records_io.h"

#include <istream>
#include <iterator>
#include <optional>
#include <unordered_map>

#include "contra/common/error.h"
#include "contra/common/file_util.h"
#include "contra/common/text.h"
#include "contra/core/dialogue.h"
#include "contra/core/validate.h"

namespace contra {

namespace {

[[noreturn]] void Fail(const std::string &path, const std::string &message) {
  throw ValidationError(0, path, message);
}

std::string Join(const std::string &prefix, const std::string &field) {
  return prefix.empty() ? field : prefix + "." + field;
}

std::string Indexed(const std::string &field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

const Json &Require(const Json &obj, const char *field,
                    const std::string &prefix) {
  auto it = obj.find(field);
  if (it == obj.end()) Fail(Join(prefix, field), "missing required field");
  return *it;
}

std::string GetString(const Json &v, const std::string &path) {
  if (!v.is_string()) Fail(path, "expected a string");
  return v.get<std::string>();
}

bool GetBool(const Json &v, const std::string &path) {
  if (!v.is_boolean()) Fail(path, "expected a boolean");
  return v.get<bool>();
}

double GetNumber(const Json &v, const std::string &path) {
  if (!v.is_number()) Fail(path, "expected a number");
  return v.get<double>();
}

int GetLabel(const Json &v, const std::string &path) {
  if (!v.is_number_integer()) Fail(path, "expected 0 or 1");
  const auto value = v.get<long long>();
  if (value != 0 && value != 1) Fail(path, "expected 0 or 1");
  return static_cast<int>(value);
}

std::vector<int> GetIndexList(const Json &v, const std::string &path) {
  if (!v.is_array()) Fail(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) Fail(Indexed(path, i), "expected an integer");
    const auto value = v[i].get<long long>();
    if (value < -1000000000LL || value > 1000000000LL) {
      Fail(Indexed(path, i), "integer out of range");
    }
    out.push_back(static_cast<int>(value));
  }
  return out;
}

void RequireObject(const Json &j, const std::string &path) {
  if (!j.is_object()) Fail(path, "expected an object");
}

Utterance UtteranceFromJson(const Json &j, const std::string &path,
                            std::size_t index) {
  RequireObject(j, path);
  Utterance u;
  const std::string speaker =
      GetString(Require(j, "speaker", path), Join(path, "speaker"));
  auto parsed = ParseSpeaker(speaker);
  if (!parsed) Fail(Join(path, "speaker"), "expected \"human\" or \"bot\"");
  u.speaker = *parsed;
  u.text = GetString(Require(j, "text", path), Join(path, "text"));
  u.turn_index = index;
  return u;
}

std::vector<Utterance> TurnsFromJson(const Json &j, const std::string &path) {
  if (!j.is_array()) Fail(path, "expected an array of turns");
  std::vector<Utterance> turns;
  turns.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    turns.push_back(UtteranceFromJson(j[i], Indexed(path, i), i));
  }
  return turns;
}

Json TurnsToJson(const std::vector<Utterance> &turns) {
  Json arr = Json::array();
  for (const Utterance &u : turns) arr.push_back(ToJson(u));
  return arr;
}

void ThrowFirstViolation(const std::vector<Violation> &violations,
                         std::size_t line) {
  if (!violations.empty()) {
    throw ValidationError(line, violations.front().field_path,
                          violations.front().message);
  }
}

struct LineSlot {
  std::size_t line = 0;
  std::string_view text;
};

std::vector<LineSlot> SplitLines(std::string_view data) {
  std::vector<LineSlot> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos < data.size()) {
    ++line;
    std::size_t end = data.find('\n', pos);
    if (end == std::string_view::npos) end = data.size();
    std::string_view text = data.substr(pos, end - pos);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (!text::IsBlank(text)) out.push_back(LineSlot{line, text});
    pos = end + 1;
  }
  return out;
}

template <typename Record>
struct LineResult {
  std::optional<Record> record;
  std::optional<ValidationError> error;
};

template <typename Record>
LineResult<Record> DecodeLine(const LineSlot &slot) {
  LineResult<Record> result;
  try {
    Json j = Json::parse(slot.text);
    Record record = FromJson<Record>(j);
    ThrowFirstViolation(ValidateRecord(record), slot.line);
    result.record = std::move(record);
  } catch (const ValidationError &e) {
    result.error.emplace(slot.line, e.field_path(), e.message());
  } catch (const nlohmann::json::exception &e) {
    result.error.emplace(slot.line, "", std::string("malformed JSON: ") + e.what());
  }
  return result;
}

}  // namespace

Json ToJson(const Utterance &u) {
  Json j;
  j["speaker"] = SpeakerName(u.speaker);
  j["text"] = u.text;
  return j;
}

Json ToJson(const Dialogue &d) {
  Json j;
  j["id"] = d.id;
  j["turns"] = TurnsToJson(d.turns);
  return j;
}

Json ToJson(const DetectionExample &e) {
  Json j;
  j["id"] = e.id;
  j["turns"] = TurnsToJson(e.turns);
  if (e.gold_label) j["label"] = *e.gold_label;
  if (e.gold_evidence) j["evidence"] = *e.gold_evidence;
  return j;
}

Json ToJson(const PredictionRecord &p) {
  Json j;
  j["id"] = p.id;
  j["score"] = p.score;
  j["label"] = p.label;
  j["evidence"] = p.evidence;
  j["pair_scores"] = p.pair_scores;
  return j;
}

Json ToJson(const RewriteExample &r) {
  Json j;
  j["id"] = r.id;
  j["context"] = TurnsToJson(r.context);
  j["target"] = ToJson(r.target);
  j["references"] = r.references;
  if (r.hypothesis) j["hypothesis"] = *r.hypothesis;
  if (r.flags) {
    Json f;
    f["is_incomplete"] = r.flags->is_incomplete;
    f["has_coreference"] = r.flags->has_coreference;
    f["has_ellipsis"] = r.flags->has_ellipsis;
    j["flags"] = std::move(f);
  }
  if (r.human_eval) {
    Json h;
    h["correct"] = r.human_eval->correct;
    h["complete"] = r.human_eval->complete;
    j["human_eval"] = std::move(h);
  }
  return j;
}

template <>
Dialogue FromJson<Dialogue>(const Json &j) {
  RequireObject(j, "");
  Dialogue d;
  d.id = GetString(Require(j, "id", ""), "id");
  d.turns = TurnsFromJson(Require(j, "turns", ""), "turns");
  return d;
}

template <>
DetectionExample FromJson<DetectionExample>(const Json &j) {
  RequireObject(j, "");
  DetectionExample e;
  e.id = GetString(Require(j, "id", ""), "id");
  e.turns = TurnsFromJson(Require(j, "turns", ""), "turns");
  if (auto it = j.find("label"); it != j.end() && !it->is_null()) {
    e.gold_label = GetLabel(*it, "label");
  }
  if (auto it = j.find("evidence"); it != j.end() && !it->is_null()) {
    e.gold_evidence = GetIndexList(*it, "evidence");
  }
  return e;
}

template <>
PredictionRecord FromJson<PredictionRecord>(const Json &j) {
  RequireObject(j, "");
  PredictionRecord p;
  p.id = GetString(Require(j, "id", ""), "id");
  p.score = GetNumber(Require(j, "score", ""), "score");
  p.label = GetLabel(Require(j, "label", ""), "label");
  p.evidence = GetIndexList(Require(j, "evidence", ""), "evidence");
  const Json &scores = Require(j, "pair_scores", "");
  if (!scores.is_array()) Fail("pair_scores", "expected an array of numbers");
  for (std::size_t i = 0; i < scores.size(); ++i) {
    p.pair_scores.push_back(GetNumber(scores[i], Indexed("pair_scores", i)));
  }
  return p;
}

template <>
RewriteExample FromJson<RewriteExample>(const Json &j) {
  RequireObject(j, "");
  RewriteExample r;
  r.id = GetString(Require(j, "id", ""), "id");
  r.context = TurnsFromJson(Require(j, "context", ""), "context");
  r.target = UtteranceFromJson(Require(j, "target", ""), "target",
                               r.context.size());
  const Json &refs = Require(j, "references", "");
  if (!refs.is_array()) Fail("references", "expected an array of strings");
  for (std::size_t i = 0; i < refs.size(); ++i) {
    r.references.push_back(GetString(refs[i], Indexed("references", i)));
  }
  if (auto it = j.find("hypothesis"); it != j.end() && !it->is_null()) {
    r.hypothesis = GetString(*it, "hypothesis");
  }
  if (auto it = j.find("flags"); it != j.end() && !it->is_null()) {
    RequireObject(*it, "flags");
    RewriteFlags f;
    auto flag = [&](const char *name) {
      auto m = it->find(name);
      return m == it->end() ? false
                            : GetBool(*m, std::string("flags.") + name);
    };
    f.is_incomplete = flag("is_incomplete");
    f.has_coreference = flag("has_coreference");
    f.has_ellipsis = flag("has_ellipsis");
    r.flags = f;
  }
  if (auto it = j.find("human_eval"); it != j.end() && !it->is_null()) {
    RequireObject(*it, "human_eval");
    HumanEval h;
    h.correct = GetBool(Require(*it, "correct", "human_eval"),
                        "human_eval.correct");
    h.complete = GetBool(Require(*it, "complete", "human_eval"),
                         "human_eval.complete");
    r.human_eval = h;
  }
  return r;
}

template <typename Record>
std::vector<Record> ParseRecords(std::string_view data, Execution exec) {
  const std::vector<LineSlot> lines = SplitLines(data);
  const auto n = static_cast<std::ptrdiff_t>(lines.size());
  std::vector<LineResult<Record>> results(lines.size());
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      results[i] = DecodeLine<Record>(lines[i]);
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      results[i] = DecodeLine<Record>(lines[i]);
    }
  }

  std::vector<Record> records;
  records.reserve(results.size());
  std::unordered_map<std::string, std::size_t> first_line;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].error) throw *results[i].error;
    Record &record = *results[i].record;
    auto [it, inserted] = first_line.emplace(record.id, lines[i].line);
    if (!inserted) {
      throw ValidationError(lines[i].line, "id",
                            "duplicate id \"" + record.id + "\" (first on line " +
                                std::to_string(it->second) + ")");
    }
    records.push_back(std::move(record));
  }
  return records;
}

template <typename Record>
std::vector<Record> ParseRecords(std::istream &in, Execution exec) {
  std::string data{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return ParseRecords<Record>(std::string_view(data), exec);
}

template <typename Record>
std::vector<Record> ReadRecordsFile(const std::string &path) {
  const std::string data = ReadFile(path);
  return ParseRecords<Record>(std::string_view(data));
}

template <typename Record>
std::string SerializeRecords(std::span<const Record> records) {
  std::string out;
  for (const Record &r : records) {
    out += ToJson(r).dump();
    out += '\n';
  }
  return out;
}

AnyCorpus ParseCorpus(std::string_view data, RecordKind kind) {
  switch (kind) {
    case RecordKind::kDialogue:
      return ParseRecords<Dialogue>(data);
    case RecordKind::kDetection:
      return ParseRecords<DetectionExample>(data);
    case RecordKind::kRewrite:
      return ParseRecords<RewriteExample>(data);
    case RecordKind::kPrediction:
      return ParseRecords<PredictionRecord>(data);
  }
  throw InvalidArgument("unknown record kind");
}

#define CONTRA_INSTANTIATE_RECORD_IO(Record)                                 \
  template std::vector<Record> ParseRecords<Record>(std::string_view,        \
                                                    Execution);              \
  template std::vector<Record> ParseRecords<Record>(std::istream &,          \
                                                    Execution);              \
  template std::vector<Record> ReadRecordsFile<Record>(const std::string &); \
  template std::string SerializeRecords<Record>(std::span<const Record>);

CONTRA_INSTANTIATE_RECORD_IO(Dialogue)
CONTRA_INSTANTIATE_RECORD_IO(DetectionExample)
CONTRA_INSTANTIATE_RECORD_IO(PredictionRecord)
CONTRA_INSTANTIATE_RECORD_IO(RewriteExample)

#undef CONTRA_INSTANTIATE_RECORD_IO

}  // namespace contra
