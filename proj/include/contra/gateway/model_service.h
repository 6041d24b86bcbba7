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

#ifndef CONTRA_GATEWAY_MODEL_SERVICE_H_
#define CONTRA_GATEWAY_MODEL_SERVICE_H_

#include <span>
#include <string>
#include <vector>

namespace contra {

// Version of the /v1 JSON wire protocol spoken by GatewayClient.
inline constexpr int kWireProtocolVersion = 1;

struct TextPair {
  std::string premise;
  std::string hypothesis;

  bool operator==(const TextPair &) const = default;
};

struct HealthInfo {
  std::string status;
  std::string model_name;
};

// Remote inference: contradiction scoring of utterance pairs and utterance
// rewriting. Outputs align one-to-one with inputs. Implementations must be
// safe to call from several threads.
class ModelService {
 public:
  virtual ~ModelService() = default;

  virtual std::vector<double> ScorePairs(std::span<const TextPair> pairs) = 0;
  virtual std::vector<std::string> RewriteBatch(
      std::span<const std::string> inputs) = 0;
  virtual HealthInfo Health() = 0;
};

}  // namespace contra

#endif  // CONTRA_GATEWAY_MODEL_SERVICE_H_
