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

#ifndef CONTRA_CORE_VALIDATE_H_
#define CONTRA_CORE_VALIDATE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "contra/core/types.h"

namespace contra {

struct Violation {
  std::string record_id;
  // 0-based position of the record in the corpus.
  std::size_t record_index = 0;
  std::string field_path;
  std::string message;

  std::string ToString() const;
};

// Per-record invariant checks. Violations are data; these never throw.
std::vector<Violation> ValidateRecord(const Dialogue &d);
std::vector<Violation> ValidateRecord(const DetectionExample &e);
std::vector<Violation> ValidateRecord(const PredictionRecord &p);
std::vector<Violation> ValidateRecord(const RewriteExample &r);

// Every per-record violation plus duplicate ids. A valid corpus yields an
// empty report.
std::vector<Violation> ValidateCorpus(std::span<const Dialogue> records);
std::vector<Violation> ValidateCorpus(std::span<const DetectionExample> records);
std::vector<Violation> ValidateCorpus(std::span<const PredictionRecord> records);
std::vector<Violation> ValidateCorpus(std::span<const RewriteExample> records);

}  // namespace contra

#endif  // CONTRA_CORE_VALIDATE_H_
