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

#include "contra/gateway/cached_service.h"

#include <optional>
#include <unordered_map>

#include <spdlog/spdlog.h>

#include "json.hpp"

namespace contra {

namespace {

std::optional<double> DecodeScore(const std::string &text) {
  auto j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_number()) return std::nullopt;
  const double v = j.get<double>();
  if (!(v >= 0.0 && v <= 1.0)) return std::nullopt;
  return v;
}

}  // namespace

CachedModelService::CachedModelService(std::shared_ptr<ModelService> inner,
                                       std::shared_ptr<ResponseCache> cache)
    : inner_(std::move(inner)), cache_(std::move(cache)) {}

std::string CachedModelService::ScoreCacheKey(const TextPair &pair) {
  nlohmann::ordered_json item;
  item["premise"] = pair.premise;
  item["hypothesis"] = pair.hypothesis;
  return item.dump();
}

std::vector<double> CachedModelService::ScorePairs(
    std::span<const TextPair> pairs) {
  std::vector<double> out(pairs.size(), 0.0);
  std::vector<std::string> keys(pairs.size());
  std::vector<TextPair> misses;
  std::unordered_map<std::string, std::size_t> miss_slot;
  std::vector<std::size_t> pending;  // output positions awaiting a miss
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    keys[i] = ScoreCacheKey(pairs[i]);
    if (auto hit = cache_->Lookup(keys[i])) {
      if (auto score = DecodeScore(*hit)) {
        out[i] = *score;
        continue;
      }
      spdlog::warn("cache: unreadable score for {}, refetching",
                   ResponseCache::Digest(keys[i]));
    }
    if (miss_slot.emplace(keys[i], misses.size()).second) {
      misses.push_back(pairs[i]);
    }
    pending.push_back(i);
  }
  if (misses.empty()) return out;

  const std::vector<double> fetched = inner_->ScorePairs(misses);
  for (std::size_t m = 0; m < misses.size(); ++m) {
    cache_->Append(ScoreCacheKey(misses[m]), nlohmann::json(fetched[m]).dump());
  }
  for (std::size_t i : pending) out[i] = fetched[miss_slot.at(keys[i])];
  return out;
}

std::vector<std::string> CachedModelService::RewriteBatch(
    std::span<const std::string> inputs) {
  std::vector<std::string> out(inputs.size());
  std::vector<std::string> misses;
  std::unordered_map<std::string, std::size_t> miss_slot;
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (auto hit = cache_->Lookup(inputs[i])) {
      out[i] = std::move(*hit);
      continue;
    }
    if (miss_slot.emplace(inputs[i], misses.size()).second) {
      misses.push_back(inputs[i]);
    }
    pending.push_back(i);
  }
  if (misses.empty()) return out;

  const std::vector<std::string> fetched = inner_->RewriteBatch(misses);
  for (std::size_t m = 0; m < misses.size(); ++m) {
    cache_->Append(misses[m], fetched[m]);
  }
  for (std::size_t i : pending) out[i] = fetched[miss_slot.at(inputs[i])];
  return out;
}

}  // namespace contra
