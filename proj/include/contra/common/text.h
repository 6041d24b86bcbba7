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

#ifndef CONTRA_COMMON_TEXT_H_
#define CONTRA_COMMON_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace contra::text {

// Decodes UTF-8 into code points. Malformed bytes decode to U+FFFD one byte at
// a time, so decoding never fails.
std::vector<char32_t> DecodeUtf8(std::string_view s);
void AppendUtf8(char32_t cp, std::string *out);

// Simple (one-to-one) case folding for ASCII, Latin-1, Latin Extended-A,
// Greek and Cyrillic. Other code points map to themselves.
char32_t FoldCase(char32_t cp);
std::string FoldCase(std::string_view s);

bool IsSpace(char32_t cp);

// ASCII punctuation/symbols plus the common Unicode punctuation blocks
// (Latin-1 marks, General Punctuation, CJK and fullwidth punctuation).
bool IsPunctuation(char32_t cp);

// Trims, collapses runs of whitespace to one ASCII space.
std::string CollapseWhitespace(std::string_view s);

bool IsBlank(std::string_view s);

}  // namespace contra::text

#endif  // CONTRA_COMMON_TEXT_H_
