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

#ifndef CONTRA_COMMON_FNV1A_H_
#define CONTRA_COMMON_FNV1A_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace contra {

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

// 64-bit FNV-1a over raw bytes.
constexpr std::uint64_t Fnv1a64(std::string_view bytes,
                                std::uint64_t state = kFnvOffsetBasis) {
  for (unsigned char c : bytes) {
    state ^= c;
    state *= kFnvPrime;
  }
  return state;
}

// Lowercase, zero-padded, 16 hex digits.
std::string HexDigest(std::uint64_t hash);

inline std::string Fnv1a64Hex(std::string_view bytes) {
  return HexDigest(Fnv1a64(bytes));
}

}  // namespace contra

#endif  // CONTRA_COMMON_FNV1A_H_
