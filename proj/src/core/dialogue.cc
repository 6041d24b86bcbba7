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

#include "contra/core/dialogue.h"

#include <algorithm>

namespace contra {

std::string_view SpeakerName(Speaker speaker) {
  return speaker == Speaker::kBot ? "bot" : "human";
}

std::optional<Speaker> ParseSpeaker(std::string_view name) {
  if (name == "human") return Speaker::kHuman;
  if (name == "bot") return Speaker::kBot;
  return std::nullopt;
}

void Renumber(std::vector<Utterance> *turns) {
  for (std::size_t i = 0; i < turns->size(); ++i) (*turns)[i].turn_index = i;
}

std::vector<std::size_t> BotTurnIndices(std::span<const Utterance> turns) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < turns.size(); ++i) {
    if (turns[i].speaker == Speaker::kBot) out.push_back(i);
  }
  return out;
}

std::size_t PriorBotTurnCount(std::span<const Utterance> turns) {
  const auto bots = static_cast<std::size_t>(
      std::count_if(turns.begin(), turns.end(), [](const Utterance &u) {
        return u.speaker == Speaker::kBot;
      }));
  if (bots == 0) return 0;
  // Only the final turn is excluded, and only when it is a bot turn.
  return turns.back().speaker == Speaker::kBot ? bots - 1 : bots;
}

}  // namespace contra
