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

#include "contra/gateway/client.h"

#include <chrono>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

#include "contra/common/error.h"
#include "contra/common/fnv1a.h"
#include "httplib.h"

namespace contra {

namespace {

using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void BadPayload(const std::string &digest, int attempts,
                             const std::string &detail) {
  throw GatewayError(GatewayErrorKind::kBadPayload, digest, attempts, detail);
}

const nlohmann::json &RequireArray(const nlohmann::json &body,
                                   const char *field, std::size_t expected,
                                   const std::string &digest, int attempts) {
  if (!body.is_object() || !body.contains(field) || !body[field].is_array()) {
    BadPayload(digest, attempts, std::string("response lacks array \"") + field + "\"");
  }
  const auto &arr = body[field];
  if (arr.size() != expected) {
    BadPayload(digest, attempts,
               std::string("\"") + field + "\" has " +
                   std::to_string(arr.size()) + " entries, expected " +
                   std::to_string(expected));
  }
  return arr;
}

}  // namespace

std::string_view GatewayErrorKindName(GatewayErrorKind kind) {
  switch (kind) {
    case GatewayErrorKind::kNetwork:
      return "network";
    case GatewayErrorKind::kProtocol:
      return "protocol";
    case GatewayErrorKind::kRemote5xx:
      return "remote_5xx";
    case GatewayErrorKind::kBadPayload:
      return "bad_payload";
  }
  return "unknown";
}

GatewayError::GatewayError(GatewayErrorKind kind, std::string request_digest,
                           int attempts, const std::string &detail)
    : std::runtime_error("gateway " + std::string(GatewayErrorKindName(kind)) +
                         " error after " + std::to_string(attempts) +
                         " attempt(s) [request " + request_digest +
                         "]: " + detail),
      kind_(kind),
      request_digest_(std::move(request_digest)),
      attempts_(attempts),
      detail_(detail) {}

GatewayError GatewayError::WithContext(const std::string &context) const {
  return GatewayError(kind_, request_digest_, attempts_,
                      context + ": " + detail_);
}

void Endpoint::Validate() const {
  if (base_url.empty()) throw InvalidArgument("endpoint base_url is empty");
  if (batch_size < 1) throw InvalidArgument("batch_size must be >= 1");
  if (max_retries < 0) throw InvalidArgument("max_retries must be >= 0");
  if (!(timeout_s > 0.0)) throw InvalidArgument("timeout must be > 0");
  if (backoff_base_s < 0.0) throw InvalidArgument("backoff_base must be >= 0");
  if (parallelism < 1) throw InvalidArgument("parallelism must be >= 1");
}

GatewayClient::GatewayClient(Endpoint endpoint)
    : endpoint_(std::move(endpoint)) {
  endpoint_.Validate();
}

std::string GatewayClient::ScoreRequestBody(std::span<const TextPair> pairs) {
  OrderedJson body;
  body["pairs"] = OrderedJson::array();
  for (const TextPair &p : pairs) {
    OrderedJson item;
    item["premise"] = p.premise;
    item["hypothesis"] = p.hypothesis;
    body["pairs"].push_back(std::move(item));
  }
  return body.dump();
}

std::string GatewayClient::RewriteRequestBody(
    std::span<const std::string> inputs) {
  OrderedJson body;
  body["items"] = OrderedJson::array();
  for (const std::string &input : inputs) {
    OrderedJson item;
    item["input"] = input;
    body["items"].push_back(std::move(item));
  }
  return body.dump();
}

GatewayClient::Response GatewayClient::Call(const std::string &method,
                                            const std::string &path,
                                            const std::string &body) {
  const std::string digest = Fnv1a64Hex(method + " " + path + "\n" + body);
  httplib::Client client(endpoint_.base_url);
  const auto timeout = std::chrono::duration<double>(endpoint_.timeout_s);
  client.set_connection_timeout(
      std::chrono::duration_cast<std::chrono::microseconds>(timeout));
  client.set_read_timeout(
      std::chrono::duration_cast<std::chrono::microseconds>(timeout));
  client.set_write_timeout(
      std::chrono::duration_cast<std::chrono::microseconds>(timeout));

  for (int attempt = 0;; ++attempt) {
    ++http_requests_;
    httplib::Result result = method == "GET"
                                 ? client.Get(path)
                                 : client.Post(path, body, "application/json");
    GatewayErrorKind failure;
    std::string detail;
    if (!result) {
      failure = GatewayErrorKind::kNetwork;
      detail = httplib::to_string(result.error());
    } else if (result->status >= 500) {
      failure = GatewayErrorKind::kRemote5xx;
      detail = "HTTP " + std::to_string(result->status);
    } else if (result->status != 200) {
      throw GatewayError(GatewayErrorKind::kProtocol, digest, attempt + 1,
                         "HTTP " + std::to_string(result->status) + " for " +
                             path);
    } else {
      nlohmann::json parsed =
          nlohmann::json::parse(result->body, nullptr, /*allow_exceptions=*/false);
      if (parsed.is_discarded()) {
        BadPayload(digest, attempt + 1, "response body is not valid JSON");
      }
      return Response{std::move(parsed), digest, attempt + 1};
    }
    if (attempt >= endpoint_.max_retries) {
      throw GatewayError(failure, digest, attempt + 1, detail);
    }
    ++retries_;
    const double delay = endpoint_.backoff_base_s * std::ldexp(1.0, attempt);
    std::this_thread::sleep_for(std::chrono::duration<double>(delay));
  }
}

template <typename Out, typename In, typename Encode, typename Decode>
std::vector<Out> GatewayClient::RunBatched(std::span<const In> items,
                                           Encode encode, Decode decode) {
  const std::size_t batch = endpoint_.batch_size;
  const std::size_t num_batches = (items.size() + batch - 1) / batch;
  std::vector<std::vector<Out>> results(num_batches);
  std::vector<std::exception_ptr> errors(num_batches);

  auto run_one = [&](std::size_t b) {
    try {
      const auto chunk = items.subspan(
          b * batch, std::min(batch, items.size() - b * batch));
      Response response = Call("POST", encode.path, encode(chunk));
      results[b] = decode(response, chunk.size());
      ++batches_;
      items_ += chunk.size();
    } catch (...) {
      errors[b] = std::current_exception();
    }
  };

  const std::size_t workers = std::min<std::size_t>(
      num_batches, static_cast<std::size_t>(endpoint_.parallelism));
  if (workers <= 1) {
    for (std::size_t b = 0; b < num_batches; ++b) {
      run_one(b);
      if (errors[b]) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t b = next++; b < num_batches && !failed; b = next++) {
          run_one(b);
          if (errors[b]) failed = true;
        }
      });
    }
  }
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Out> out;
  out.reserve(items.size());
  for (auto &r : results) {
    for (auto &v : r) out.push_back(std::move(v));
  }
  return out;
}

namespace {

struct ScoreEncoder {
  std::string path = "/v1/score";
  std::string operator()(std::span<const TextPair> chunk) const {
    return GatewayClient::ScoreRequestBody(chunk);
  }
};

struct RewriteEncoder {
  std::string path = "/v1/rewrite";
  std::string operator()(std::span<const std::string> chunk) const {
    return GatewayClient::RewriteRequestBody(chunk);
  }
};

}  // namespace

std::vector<double> GatewayClient::ScorePairs(std::span<const TextPair> pairs) {
  if (pairs.empty()) return {};
  return RunBatched<double>(
      pairs, ScoreEncoder{}, [](const Response &r, std::size_t expected) {
        const auto &arr = RequireArray(r.body, "scores", expected, r.digest, r.attempts);
        std::vector<double> scores;
        scores.reserve(arr.size());
        for (const auto &v : arr) {
          if (!v.is_number()) BadPayload(r.digest, r.attempts, "non-numeric score");
          const double s = v.get<double>();
          if (!std::isfinite(s) || s < 0.0 || s > 1.0) {
            BadPayload(r.digest, r.attempts,
                       "score " + v.dump() + " outside [0, 1]");
          }
          scores.push_back(s);
        }
        return scores;
      });
}

std::vector<std::string> GatewayClient::RewriteBatch(
    std::span<const std::string> inputs) {
  if (inputs.empty()) return {};
  return RunBatched<std::string>(
      inputs, RewriteEncoder{}, [](const Response &r, std::size_t expected) {
        const auto &arr = RequireArray(r.body, "outputs", expected, r.digest, r.attempts);
        std::vector<std::string> outputs;
        outputs.reserve(arr.size());
        for (const auto &v : arr) {
          if (!v.is_string()) BadPayload(r.digest, r.attempts, "non-string output");
          outputs.push_back(v.get<std::string>());
        }
        return outputs;
      });
}

HealthInfo GatewayClient::Health() {
  Response r = Call("GET", "/health", "");
  const auto &body = r.body;
  auto field = [&](const char *name) {
    if (!body.is_object() || !body.contains(name) || !body[name].is_string()) {
      BadPayload(r.digest, r.attempts, std::string("health lacks string \"") + name + "\"");
    }
    return body[name].get<std::string>();
  };
  HealthInfo info;
  info.status = field("status");
  info.model_name = field("model_name");
  return info;
}

GatewayStats GatewayClient::stats() const {
  return GatewayStats{http_requests_.load(), batches_.load(), items_.load(),
                      retries_.load()};
}

}  // namespace contra
