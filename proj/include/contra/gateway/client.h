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

#ifndef CONTRA_GATEWAY_CLIENT_H_
#define CONTRA_GATEWAY_CLIENT_H_

#include <atomic>
#include <cstddef>
#include <string>

#include "contra/gateway/endpoint.h"
#include "contra/gateway/model_service.h"
#include "json.hpp"

namespace contra {

struct GatewayStats {
  std::size_t http_requests = 0;  // every attempt, retries included
  std::size_t batches = 0;        // logical batches completed
  std::size_t items = 0;          // items in completed batches
  std::size_t retries = 0;
};

// HTTP client for the inference service:
//   POST /v1/score    {"pairs":[{"premise":..,"hypothesis":..}]} -> {"scores":[..]}
//   POST /v1/rewrite  {"items":[{"input":..}]}                   -> {"outputs":[..]}
//   GET  /health                               -> {"status":..,"model_name":..}
// Inputs are split into batches of endpoint.batch_size, sent with up to
// endpoint.parallelism in flight, and reassembled in request order. Network
// failures and 5xx responses are retried with exponential backoff using
// byte-identical bodies; 4xx and malformed payloads fail immediately.
class GatewayClient : public ModelService {
 public:
  explicit GatewayClient(Endpoint endpoint);

  std::vector<double> ScorePairs(std::span<const TextPair> pairs) override;
  std::vector<std::string> RewriteBatch(
      std::span<const std::string> inputs) override;
  HealthInfo Health() override;

  GatewayStats stats() const;
  const Endpoint &endpoint() const { return endpoint_; }

  // Canonical request bodies, exposed for protocol conformance tests.
  static std::string ScoreRequestBody(std::span<const TextPair> pairs);
  static std::string RewriteRequestBody(std::span<const std::string> inputs);

 private:
  struct Response {
    nlohmann::json body;
    std::string digest;
    int attempts = 1;
  };

  Response Call(const std::string &method, const std::string &path,
                const std::string &body);

  template <typename Out, typename In, typename Encode, typename Decode>
  std::vector<Out> RunBatched(std::span<const In> items, Encode encode,
                              Decode decode);

  Endpoint endpoint_;
  std::atomic<std::size_t> http_requests_{0};
  std::atomic<std::size_t> batches_{0};
  std::atomic<std::size_t> items_{0};
  std::atomic<std::size_t> retries_{0};
};

}  // namespace contra

#endif  // CONTRA_GATEWAY_CLIENT_H_
