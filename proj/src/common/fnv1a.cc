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

#include "contra/common/fnv1a.h"

#include <array>

#include "contra/common/error.h"

namespace contra {

std::string HexDigest(std::uint64_t hash) {
  static constexpr std::array<char, 16> kDigits = {
      '0', '1', '2', '3', '4', '5', '6', '7',
      '8', '9', 'a', 'b', 'c', 'd', 'e', 'f'};
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kDigits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

ValidationError::ValidationError(std::size_t line, std::string field_path,
                                 const std::string &message)
    : std::runtime_error(
          (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
          (field_path.empty() ? std::string() : field_path + ": ") + message),
      line_(line),
      field_path_(std::move(field_path)),
      message_(message) {}

}  // namespace contra
