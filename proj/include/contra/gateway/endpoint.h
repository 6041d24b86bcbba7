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

#ifndef CONTRA_GATEWAY_ENDPOINT_H_
#define CONTRA_GATEWAY_ENDPOINT_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace contra {

struct Endpoint {
  std::string base_url = "http://127.0.0.1:8080";
  double timeout_s = 30.0;
  int max_retries = 3;
  // Sleep before retry k (0-based) is backoff_base_s * 2^k.
  double backoff_base_s = 0.5;
  std::size_t batch_size = 32;
  // Maximum number of batches in flight.
  int parallelism = 4;

  // Throws InvalidArgument on out-of-range settings.
  void Validate() const;
};

enum class GatewayErrorKind { kNetwork, kProtocol, kRemote5xx, kBadPayload };

std::string_view GatewayErrorKindName(GatewayErrorKind kind);

// A remote call failed for good. request_digest is the FNV-1a hex digest of
// the request body, enough to locate and replay the request offline.
class GatewayError : public std::runtime_error {
 public:
  GatewayError(GatewayErrorKind kind, std::string request_digest, int attempts,
               const std::string &detail);

  GatewayErrorKind kind() const { return kind_; }
  const std::string &request_digest() const { return request_digest_; }
  int attempts() const { return attempts_; }
  const std::string &detail() const { return detail_; }

  // Same error with `context` prepended to the detail.
  GatewayError WithContext(const std::string &context) const;

 private:
  GatewayErrorKind kind_;
  std::string request_digest_;
  int attempts_;
  std::string detail_;
};

}  // namespace contra

#endif  // CONTRA_GATEWAY_ENDPOINT_H_
