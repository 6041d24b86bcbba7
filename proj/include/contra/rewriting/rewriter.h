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

#ifndef CONTRA_REWRITING_REWRITER_H_
#define CONTRA_REWRITING_REWRITER_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "contra/core/types.h"
#include "contra/gateway/model_service.h"

namespace contra {

// Speaker and target markers of the rewriter input encoding. They are part of
// the wire contract with any serving model.
inline constexpr std::string_view kHumanToken = "[H]";
inline constexpr std::string_view kBotToken = "[B]";
inline constexpr std::string_view kRewriteMarker = "[REWRITE]";

inline constexpr std::size_t kDefaultMaxContext = 6;

std::string_view SpeakerToken(Speaker speaker);

struct RewriterInput {
  std::string encoded;
  std::size_t context_len = 0;
};

// Keeps the last `max_context` context utterances (oldest first) and encodes
//   "[H] text [B] text ... [REWRITE] [B] target"
// With no context the result starts at "[REWRITE]".
RewriterInput BuildRewriterInput(std::span<const Utterance> context,
                                 const Utterance &target,
                                 std::size_t max_context);

struct RewriteRule {
  std::string pattern;
  std::string replacement;
};

// Literal, case-sensitive substitutions. The text is scanned left to right;
// at each position the first rule whose pattern matches there is applied and
// scanning resumes after the match. Replacements are never rescanned.
class RuleTable {
 public:
  RuleTable() = default;
  // Throws InvalidArgument on an empty pattern.
  explicit RuleTable(std::vector<RewriteRule> rules);

  // Tab-separated "pattern<TAB>replacement" lines. Blank lines and lines
  // starting with '#' are ignored.
  static RuleTable Parse(std::string_view tsv);

  std::string Apply(std::string_view text) const;
  const std::vector<RewriteRule> &rules() const { return rules_; }

 private:
  std::vector<RewriteRule> rules_;
};

struct IdentityRewriter {};

struct RemoteRewriter {
  std::shared_ptr<ModelService> service;
};

using RewriterKind = std::variant<IdentityRewriter, RuleTable, RemoteRewriter>;

// Rewrites one utterance. Identity returns the target text, a rule table
// rewrites the target text only, and a remote rewriter sends the encoded input
// and returns the service output verbatim.
std::string RewriteUtterance(const RewriterKind &kind,
                             std::span<const Utterance> context,
                             const Utterance &target, std::size_t max_context);

// Replaces every bot turn's text by its rewrite. Each rewrite sees the
// original preceding turns, never earlier rewrites; human turns are untouched.
// Remote failures are rethrown as GatewayError naming the turn index.
std::vector<Utterance> RewriteBotTurns(const RewriterKind &kind,
                                       std::span<const Utterance> turns,
                                       std::size_t max_context);

Dialogue RewriteDialogueBots(const Dialogue &dialogue, const RewriterKind &kind,
                             std::size_t max_context = kDefaultMaxContext);
DetectionExample RewriteDialogueBots(const DetectionExample &example,
                                     const RewriterKind &kind,
                                     std::size_t max_context = kDefaultMaxContext);

}  // namespace contra

#endif  // CONTRA_REWRITING_REWRITER_H_
