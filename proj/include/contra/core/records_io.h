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

#ifndef CONTRA_CORE_RECORDS_IO_H_
#define CONTRA_CORE_RECORDS_IO_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "contra/common/execution.h"
#include "contra/core/types.h"
#include "json.hpp"

namespace contra {

// Insertion-ordered so serialized field order is stable.
using Json = nlohmann::ordered_json;

enum class RecordKind { kDialogue, kDetection, kRewrite, kPrediction };

// JSON mapping for the newline-delimited record schemas. The FromJson
// functions throw ValidationError (line 0) naming the offending field path;
// they check structure and types only, not record invariants.
Json ToJson(const Utterance &u);
Json ToJson(const Dialogue &d);
Json ToJson(const DetectionExample &e);
Json ToJson(const PredictionRecord &p);
Json ToJson(const RewriteExample &r);

template <typename Record>
Record FromJson(const Json &j);

// Parses one record per non-blank line, then validates every record and the
// corpus (duplicate ids). The first problem, in line order, is thrown as a
// ValidationError carrying its 1-based line number and field path. Lines are
// decoded in parallel under Execution::kParallel.
template <typename Record>
std::vector<Record> ParseRecords(std::string_view data,
                                 Execution exec = Execution::kParallel);

template <typename Record>
std::vector<Record> ParseRecords(std::istream &in,
                                 Execution exec = Execution::kParallel);

template <typename Record>
std::vector<Record> ReadRecordsFile(const std::string &path);

// One compact JSON object per line, each terminated by '\n'. An empty corpus
// serializes to an empty string.
template <typename Record>
std::string SerializeRecords(std::span<const Record> records);

using AnyCorpus =
    std::variant<std::vector<Dialogue>, std::vector<DetectionExample>,
                 std::vector<RewriteExample>, std::vector<PredictionRecord>>;

AnyCorpus ParseCorpus(std::string_view data, RecordKind kind);

}  // namespace contra

#endif  // CONTRA_CORE_RECORDS_IO_H_
