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

#ifndef CONTRA_CORE_DIALOGUE_H_
#define CONTRA_CORE_DIALOGUE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "contra/core/types.h"

namespace contra {

// Positions of bot turns in order. Element k-1 is the k-th bot utterance, the
// one evidence index k refers to.
std::vector<std::size_t> BotTurnIndices(std::span<const Utterance> turns);

inline std::vector<std::size_t> BotTurnIndices(const Dialogue &d) {
  return BotTurnIndices(d.turns);
}

// Number of bot turns before the final one; the valid evidence range is
// [1, PriorBotTurnCount].
std::size_t PriorBotTurnCount(std::span<const Utterance> turns);

}  // namespace contra

#endif  // CONTRA_CORE_DIALOGUE_H_
