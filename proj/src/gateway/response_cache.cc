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

#include "contra/gateway/response_cache.h"

#include <filesystem>

#include <spdlog/spdlog.h>

#include "contra/common/fnv1a.h"
#include "json.hpp"

namespace contra {

ResponseCache::ResponseCache(std::string path) : path_(std::move(path)) {
  if (!path_.empty()) Load();
}

std::string ResponseCache::Digest(std::string_view input) {
  return Fnv1a64Hex(input);
}

void ResponseCache::Load() {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    const bool well_formed =
        !j.is_discarded() && j.is_object() && j.contains("digest") &&
        j.contains("input") && j.contains("output") &&
        j["digest"].is_string() && j["input"].is_string() &&
        j["output"].is_string();
    if (!well_formed ||
        j["digest"].get<std::string>() != Digest(j["input"].get<std::string>())) {
      ++skipped_lines_;
      spdlog::warn("cache {}: skipping corrupt line {}", path_, line_no);
      continue;
    }
    entries_.emplace(j["digest"].get<std::string>(),
                     std::make_pair(j["input"].get<std::string>(),
                                    j["output"].get<std::string>()));
  }
}

std::optional<std::string> ResponseCache::Lookup(std::string_view input) const {
  std::shared_lock lock(mu_);
  auto it = entries_.find(Digest(input));
  if (it == entries_.end() || it->second.first != input) return std::nullopt;
  return it->second.second;
}

void ResponseCache::Append(std::string_view input, std::string_view output) {
  std::unique_lock lock(mu_);
  const std::string digest = Digest(input);
  auto [it, inserted] = entries_.emplace(
      digest, std::make_pair(std::string(input), std::string(output)));
  if (!inserted) return;
  if (path_.empty()) return;
  if (!out_.is_open()) {
    // A torn final line from an aborted run would otherwise swallow our first
    // entry.
    const bool needs_newline = [&] {
      std::ifstream tail(path_, std::ios::binary | std::ios::ate);
      if (!tail || tail.tellg() <= 0) return false;
      tail.seekg(-1, std::ios::end);
      return tail.get() != '\n';
    }();
    out_.open(path_, std::ios::binary | std::ios::app);
    if (!out_) {
      spdlog::warn("cache {}: cannot open for append", path_);
      return;
    }
    if (needs_newline) out_ << '\n';
  }
  nlohmann::ordered_json j;
  j["digest"] = digest;
  j["input"] = input;
  j["output"] = output;
  out_ << j.dump() << '\n';
  out_.flush();
}

std::size_t ResponseCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

}  // namespace contra
