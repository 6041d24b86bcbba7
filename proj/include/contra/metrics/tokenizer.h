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

#ifndef CONTRA_METRICS_TOKENIZER_H_
#define CONTRA_METRICS_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace contra {

// Case-folded tokens from Tokenize(). Never contains empty tokens.
using TokenSeq = std::vector<std::string>;

// The canonical tokenizer shared by every text metric and the overlap scorer:
// case-fold, emit each punctuation character as its own token, split the rest
// on whitespace.
//   "I'm OK—really." -> [i, ', m, ok, —, really, .]
TokenSeq Tokenize(std::string_view text);

// True when every code point of the token is punctuation.
bool IsPunctuationToken(std::string_view token);

}  // namespace contra

#endif  // CONTRA_METRICS_TOKENIZER_H_
