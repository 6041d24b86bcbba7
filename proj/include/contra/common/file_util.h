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

#ifndef CONTRA_COMMON_FILE_UTIL_H_
#define CONTRA_COMMON_FILE_UTIL_H_

#include <string>
#include <string_view>

namespace contra {

// Whole-file read, "-" reads standard input. Throws std::runtime_error when
// the file cannot be opened.
std::string ReadFile(const std::string &path);

// Writes to a sibling temp file and renames it over `path`. "-" writes to
// standard output.
void WriteFileAtomically(const std::string &path, std::string_view content);

}  // namespace contra

#endif  // CONTRA_COMMON_FILE_UTIL_H_
