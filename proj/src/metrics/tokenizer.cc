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

#include "contra/metrics/tokenizer.h"

#include "contra/common/text.h"

namespace contra {

TokenSeq Tokenize(std::string_view input) {
  TokenSeq tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char32_t cp : text::DecodeUtf8(input)) {
    if (text::IsSpace(cp)) {
      flush();
    } else if (text::IsPunctuation(cp)) {
      flush();
      std::string punct;
      text::AppendUtf8(cp, &punct);
      tokens.push_back(std::move(punct));
    } else {
      text::AppendUtf8(text::FoldCase(cp), &current);
    }
  }
  flush();
  return tokens;
}

bool IsPunctuationToken(std::string_view token) {
  if (token.empty()) return false;
  for (char32_t cp : text::DecodeUtf8(token)) {
    if (!text::IsPunctuation(cp)) return false;
  }
  return true;
}

}  // namespace contra
