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

#include <gtest/gtest.h>

#include "contra/common/file_util.h"
#include "contra/gateway/client.h"
#include "json.hpp"
#include "support/mock_server.h"

namespace contra {
namespace {

std::string Fixture(const std::string &name) {
  std::string s = ReadFile(std::string(CONTRA_FIXTURE_DIR) + "/protocol/" + name);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

const std::vector<TextPair> kPairs = {
    {"Mine is johnny cash of course.",
     "I have not been since last year though. I like sports."},
    {"He said \"café\" twice\tthen left", "Ünïcödé — fine."}};

const std::vector<std::string> kInputs = {
    "[H] Hi, what's your favorite singer? [REWRITE] [B] Mine is johnny cash of course.",
    "[REWRITE] [B] Hello there!"};

TEST(ProtocolTest, ScoreRequestMatchesGolden) {
  EXPECT_EQ(GatewayClient::ScoreRequestBody(kPairs), Fixture("score_request.json"));
}

TEST(ProtocolTest, RewriteRequestMatchesGolden) {
  EXPECT_EQ(GatewayClient::RewriteRequestBody(kInputs), Fixture("rewrite_request.json"));
}

TEST(ProtocolTest, ClientSendsGoldenBytes) {
  testing::MockServer server;
  Endpoint e;
  e.base_url = server.url();
  GatewayClient client(e);
  const auto scores = client.ScorePairs(kPairs);
  ASSERT_EQ(server.bodies().size(), 1u);
  EXPECT_EQ(server.bodies()[0], Fixture("score_request.json"));
  const auto golden = nlohmann::json::parse(Fixture("score_response.json"));
  EXPECT_EQ(scores, golden["scores"].get<std::vector<double>>());
}

TEST(ProtocolTest, EchoRewriteMatchesGolden) {
  testing::MockServer::Options opts;
  opts.rewrite_mode = testing::MockServer::RewriteMode::kEchoTarget;
  testing::MockServer server(opts);
  Endpoint e;
  e.base_url = server.url();
  GatewayClient client(e);
  const auto outputs = client.RewriteBatch(kInputs);
  EXPECT_EQ(server.bodies()[0], Fixture("rewrite_request.json"));
  const auto golden = nlohmann::json::parse(Fixture("rewrite_response_echo.json"));
  EXPECT_EQ(outputs, golden["outputs"].get<std::vector<std::string>>());
}

TEST(ProtocolTest, HealthGolden) {
  testing::MockServer::Options opts;
  opts.health_body = Fixture("health_response.json");
  testing::MockServer server(opts);
  Endpoint e;
  e.base_url = server.url();
  GatewayClient client(e);
  const auto info = client.Health();
  EXPECT_EQ(info.model_name, "echo");
}

TEST(ProtocolTest, ThousandItemsKeepOrder) {
  testing::MockServer::Options opts;
  opts.rewrite_mode = testing::MockServer::RewriteMode::kEchoInput;
  testing::MockServer server(opts);
  Endpoint e;
  e.base_url = server.url();
  e.batch_size = 64;
  GatewayClient client(e);
  std::vector<std::string> inputs;
  for (int i = 0; i < 1000; ++i) inputs.push_back("[REWRITE] [B] item " + std::to_string(i));
  EXPECT_EQ(client.RewriteBatch(inputs), inputs);
}

}  // namespace
}  // namespace contra
