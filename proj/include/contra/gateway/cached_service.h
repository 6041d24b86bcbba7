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

#ifndef CONTRA_GATEWAY_CACHED_SERVICE_H_
#define CONTRA_GATEWAY_CACHED_SERVICE_H_

#include <memory>
#include <string>

#include "contra/gateway/model_service.h"
#include "contra/gateway/response_cache.h"

namespace contra {

// Wraps a ModelService with a ResponseCache. Only items missing from the cache
// go to the inner service (deduplicated, in first-seen order); their responses
// are appended once the inner call succeeds. Output order always matches
// input order.
//
// Cache keys: a rewrite item is its encoded input string; a score item is the
// compact JSON {"premise":..,"hypothesis":..}, with the score stored as its
// shortest round-trip decimal.
class CachedModelService : public ModelService {
 public:
  CachedModelService(std::shared_ptr<ModelService> inner,
                     std::shared_ptr<ResponseCache> cache);

  std::vector<double> ScorePairs(std::span<const TextPair> pairs) override;
  std::vector<std::string> RewriteBatch(
      std::span<const std::string> inputs) override;
  HealthInfo Health() override { return inner_->Health(); }

  static std::string ScoreCacheKey(const TextPair &pair);

 private:
  std::shared_ptr<ModelService> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

}  // namespace contra

#endif  // CONTRA_GATEWAY_CACHED_SERVICE_H_
