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

#include <gtest/gtest.h>

#include "contra/metrics/tokenizer.h"

namespace contra {
namespace {

using T = TokenSeq;

TEST(TokenizerTest, SplitsTrailingPunctuation) {
  EXPECT_EQ(Tokenize("Mine is johnny cash of course."),
            (T{"mine", "is", "johnny", "cash", "of", "course", "."}));
}

TEST(TokenizerTest, Empty) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize("   \t\n").empty());
}

TEST(TokenizerTest, ApostropheAndDash) {
  EXPECT_EQ(Tokenize("I'm OK—really."),
            (T{"i", "'", "m", "ok", "—", "really", "."}));
}

TEST(TokenizerTest, RunsOfPunctuationAreSeparateTokens) {
  EXPECT_EQ(Tokenize("What?!..."), (T{"what", "?", "!", ".", ".", "."}));
  EXPECT_EQ(Tokenize("“Hi”…"), (T{"“", "hi", "”", "…"}));
}

TEST(TokenizerTest, CaseFoldsNonAscii) {
  EXPECT_EQ(Tokenize("CAFÉ Über"), (T{"café", "über"}));
}

TEST(TokenizerTest, PunctuationTokenPredicate) {
  EXPECT_TRUE(IsPunctuationToken("."));
  EXPECT_TRUE(IsPunctuationToken("—"));
  EXPECT_FALSE(IsPunctuationToken("a"));
  EXPECT_FALSE(IsPunctuationToken(""));
}

}  // namespace
}  // namespace contra
