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

#ifndef CONTRA_COMMON_ERROR_H_
#define CONTRA_COMMON_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contra {

// A record or corpus violates a data invariant. `line` is 1-based and 0 when
// the record did not come from a file.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::size_t line, std::string field_path,
                  const std::string &message);

  std::size_t line() const { return line_; }
  const std::string &field_path() const { return field_path_; }
  const std::string &message() const { return message_; }

 private:
  std::size_t line_;
  std::string field_path_;
  std::string message_;
};

// Caller passed arguments that make the operation meaningless (empty corpus,
// mismatched lengths, bad option values).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace contra

#endif  // CONTRA_COMMON_ERROR_H_
