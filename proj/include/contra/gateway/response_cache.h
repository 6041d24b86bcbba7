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

#ifndef CONTRA_GATEWAY_RESPONSE_CACHE_H_
#define CONTRA_GATEWAY_RESPONSE_CACHE_H_

#include <cstddef>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace contra {

// Content-addressed response store backed by an append-only JSONL file:
//   {"digest": <FNV-1a 64 hex of input>, "input": str, "output": str}
// Entries are keyed per request item, so batch composition never affects
// hits. Lines that fail to parse, or whose digest does not match their input,
// are skipped with a warning. Reads may run concurrently; appends are
// serialized.
class ResponseCache {
 public:
  // An empty path keeps the cache in memory only.
  explicit ResponseCache(std::string path = "");

  ResponseCache(const ResponseCache &) = delete;
  ResponseCache &operator=(const ResponseCache &) = delete;

  std::optional<std::string> Lookup(std::string_view input) const;

  // Records a response and appends it to the file. Re-adding a known input is
  // a no-op.
  void Append(std::string_view input, std::string_view output);

  std::size_t size() const;
  std::size_t skipped_lines() const { return skipped_lines_; }
  const std::string &path() const { return path_; }

  static std::string Digest(std::string_view input);

 private:
  void Load();

  std::string path_;
  mutable std::shared_mutex mu_;
  // digest -> (input, output)
  std::unordered_map<std::string, std::pair<std::string, std::string>> entries_;
  std::ofstream out_;
  std::size_t skipped_lines_ = 0;
};

}  // namespace contra

#endif  // CONTRA_GATEWAY_RESPONSE_CACHE_H_
