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

#ifndef CONTRA_TESTS_SUPPORT_MOCK_SERVER_H_
#define CONTRA_TESTS_SUPPORT_MOCK_SERVER_H_

// In-process stand-in for the inference service, instrumented for tests.

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"

namespace contra::testing {

enum class MockRewriteMode {
  kEchoInput,   // output = the whole encoded input
  kEchoTarget,  // output = text after "[REWRITE] [B] " (or "[H] ")
};

struct MockServerOptions {
  std::function<double(const std::string &, const std::string &)> score =
      [](const std::string &, const std::string &) { return 0.5; };
  MockRewriteMode rewrite_mode = MockRewriteMode::kEchoInput;
  // The first `fail_first` requests answer `fail_status`.
  int fail_first = 0;
  int fail_status = 500;
  // Every request sleeps this long before answering.
  std::chrono::milliseconds delay{0};
  // Raw body returned instead of the computed one, when non-empty.
  std::string score_override;
  std::string rewrite_override;
  std::string health_body = R"({"status":"ok","model_name":"mock"})";
};

class MockServer {
 public:
  using RewriteMode = MockRewriteMode;
  using Options = MockServerOptions;

  explicit MockServer(Options options = {}) : options_(std::move(options)) {
    server_.Post("/v1/score", [this](const httplib::Request &req,
                                     httplib::Response &res) {
      if (Intercept(req, res)) return;
      const auto body = nlohmann::json::parse(req.body);
      nlohmann::ordered_json out;
      out["scores"] = nlohmann::ordered_json::array();
      for (const auto &p : body.at("pairs")) {
        out["scores"].push_back(
            options_.score(p.at("premise").get<std::string>(),
                           p.at("hypothesis").get<std::string>()));
        ++items_;
      }
      Reply(res, options_.score_override.empty() ? out.dump()
                                                 : options_.score_override);
    });
    server_.Post("/v1/rewrite", [this](const httplib::Request &req,
                                       httplib::Response &res) {
      if (Intercept(req, res)) return;
      const auto body = nlohmann::json::parse(req.body);
      nlohmann::ordered_json out;
      out["outputs"] = nlohmann::ordered_json::array();
      for (const auto &item : body.at("items")) {
        out["outputs"].push_back(Rewrite(item.at("input").get<std::string>()));
        ++items_;
      }
      Reply(res, options_.rewrite_override.empty() ? out.dump()
                                                   : options_.rewrite_override);
    });
    server_.Get("/health", [this](const httplib::Request &req,
                                  httplib::Response &res) {
      if (Intercept(req, res)) return;
      Reply(res, options_.health_body);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockServer() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

  // Every request received, failed ones included.
  int requests() const { return requests_; }
  // Items answered successfully.
  int items() const { return items_; }
  std::vector<std::string> bodies() const {
    std::lock_guard<std::mutex> lock(mu_);
    return bodies_;
  }
  void ResetCounters() {
    requests_ = 0;
    items_ = 0;
    std::lock_guard<std::mutex> lock(mu_);
    bodies_.clear();
  }

 private:
  // Counts the request; answers it with the injected failure if one is due.
  bool Intercept(const httplib::Request &req, httplib::Response &res) {
    const int seen = requests_++;
    {
      std::lock_guard<std::mutex> lock(mu_);
      bodies_.push_back(req.body);
    }
    if (options_.delay.count() > 0) std::this_thread::sleep_for(options_.delay);
    if (seen < options_.fail_first) {
      res.status = options_.fail_status;
      res.set_content(R"({"error":"injected"})", "application/json");
      return true;
    }
    return false;
  }

  static void Reply(httplib::Response &res, const std::string &body) {
    res.status = 200;
    res.set_content(body, "application/json");
  }

  std::string Rewrite(const std::string &input) const {
    if (options_.rewrite_mode == RewriteMode::kEchoInput) return input;
    const std::string marker = "[REWRITE] ";
    std::size_t at = input.rfind(marker);
    if (at == std::string::npos) return input;
    std::string rest = input.substr(at + marker.size());
    for (const char *tok : {"[B] ", "[H] "}) {
      if (rest.rfind(tok, 0) == 0) return rest.substr(4);
    }
    return rest;
  }

  Options options_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> requests_{0};
  std::atomic<int> items_{0};
  mutable std::mutex mu_;
  std::vector<std::string> bodies_;
};

}  // namespace contra::testing

#endif  // CONTRA_TESTS_SUPPORT_MOCK_SERVER_H_
