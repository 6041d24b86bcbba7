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

#include "contra/rewriting/rewriter.h"

#include <algorithm>

#include "contra/common/error.h"
#include "contra/gateway/endpoint.h"

namespace contra {

namespace {

void AppendSegment(const Utterance &u, std::string *out) {
  out->append(SpeakerToken(u.speaker));
  out->push_back(' ');
  out->append(u.text);
}

}  // namespace

std::string_view SpeakerToken(Speaker speaker) {
  return speaker == Speaker::kBot ? kBotToken : kHumanToken;
}

RewriterInput BuildRewriterInput(std::span<const Utterance> context,
                                 const Utterance &target,
                                 std::size_t max_context) {
  const std::size_t keep = std::min(max_context, context.size());
  RewriterInput input;
  input.context_len = keep;
  for (const Utterance &u : context.subspan(context.size() - keep)) {
    AppendSegment(u, &input.encoded);
    input.encoded.push_back(' ');
  }
  input.encoded.append(kRewriteMarker);
  input.encoded.push_back(' ');
  AppendSegment(target, &input.encoded);
  return input;
}

RuleTable::RuleTable(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].pattern.empty()) {
      throw InvalidArgument("rule " + std::to_string(i + 1) +
                            " has an empty pattern");
    }
  }
}

RuleTable RuleTable::Parse(std::string_view tsv) {
  std::vector<RewriteRule> rules;
  std::size_t pos = 0, line = 0;
  while (pos <= tsv.size()) {
    ++line;
    std::size_t end = tsv.find('\n', pos);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view row = tsv.substr(pos, end - pos);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    pos = end + 1;
    if (row.empty() || row.front() == '#') continue;
    const std::size_t tab = row.find('\t');
    if (tab == std::string_view::npos) {
      throw InvalidArgument("rule table line " + std::to_string(line) +
                            ": expected pattern<TAB>replacement");
    }
    rules.push_back(RewriteRule{std::string(row.substr(0, tab)),
                                std::string(row.substr(tab + 1))});
  }
  return RuleTable(std::move(rules));
}

std::string RuleTable::Apply(std::string_view text) const {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const RewriteRule *hit = nullptr;
    for (const RewriteRule &rule : rules_) {
      if (text.substr(i).starts_with(rule.pattern)) {
        hit = &rule;
        break;
      }
    }
    if (hit != nullptr) {
      out += hit->replacement;
      i += hit->pattern.size();
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return out;
}

std::string RewriteUtterance(const RewriterKind &kind,
                             std::span<const Utterance> context,
                             const Utterance &target, std::size_t max_context) {
  struct Visitor {
    std::span<const Utterance> context;
    const Utterance &target;
    std::size_t max_context;

    std::string operator()(const IdentityRewriter &) const { return target.text; }
    std::string operator()(const RuleTable &table) const {
      return table.Apply(target.text);
    }
    std::string operator()(const RemoteRewriter &remote) const {
      if (!remote.service) throw InvalidArgument("remote rewriter has no service");
      const std::string encoded =
          BuildRewriterInput(context, target, max_context).encoded;
      std::vector<std::string> out =
          remote.service->RewriteBatch(std::span<const std::string>(&encoded, 1));
      return std::move(out.at(0));
    }
  };
  return std::visit(Visitor{context, target, max_context}, kind);
}

std::vector<Utterance> RewriteBotTurns(const RewriterKind &kind,
                                       std::span<const Utterance> turns,
                                       std::size_t max_context) {
  std::vector<Utterance> out(turns.begin(), turns.end());
  for (std::size_t k = 0; k < turns.size(); ++k) {
    if (turns[k].speaker != Speaker::kBot) continue;
    try {
      out[k].text =
          RewriteUtterance(kind, turns.first(k), turns[k], max_context);
    } catch (const GatewayError &e) {
      throw e.WithContext("rewriting turn " + std::to_string(k));
    }
  }
  return out;
}

Dialogue RewriteDialogueBots(const Dialogue &dialogue, const RewriterKind &kind,
                             std::size_t max_context) {
  Dialogue out = dialogue;
  out.turns = RewriteBotTurns(kind, dialogue.turns, max_context);
  return out;
}

DetectionExample RewriteDialogueBots(const DetectionExample &example,
                                     const RewriterKind &kind,
                                     std::size_t max_context) {
  DetectionExample out = example;
  out.turns = RewriteBotTurns(kind, example.turns, max_context);
  return out;
}

}  // namespace contra
