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

#include <cstdio>
#include <fstream>

#include "contra/common/error.h"
#include "contra/common/file_util.h"
#include "contra/gateway/cached_service.h"
#include "contra/gateway/client.h"
#include "contra/gateway/response_cache.h"
#include "json.hpp"
#include "support/mock_server.h"

namespace contra {
namespace {

using testing::MockServer;

// Deterministic score derived from the premise "p<i>".
double IndexScore(const std::string &premise, const std::string &) {
  return static_cast<double>(std::stoi(premise.substr(1)) % 1000) / 1000.0;
}

std::vector<TextPair> IndexedPairs(std::size_t n, const std::string &tag = "") {
  std::vector<TextPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.push_back({"p" + std::to_string(i), "h" + tag + std::to_string(i)});
  }
  return pairs;
}

Endpoint Fast(const MockServer &server) {
  Endpoint e;
  e.base_url = server.url();
  e.timeout_s = 5.0;
  e.max_retries = 2;
  e.backoff_base_s = 0.001;
  e.batch_size = 100;
  e.parallelism = 1;
  return e;
}

std::string TempPath(const std::string &name) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::remove(path.c_str());
  return path;
}

TEST(GatewayTest, BatchesAreSentInOrder) {
  MockServer::Options opts;
  opts.score = IndexScore;
  MockServer server(opts);
  GatewayClient client(Fast(server));
  const auto pairs = IndexedPairs(250);
  const auto scores = client.ScorePairs(pairs);
  ASSERT_EQ(server.requests(), 3);
  const auto bodies = server.bodies();
  const std::size_t sizes[] = {100, 100, 50};
  for (std::size_t b = 0; b < 3; ++b) {
    const auto j = nlohmann::json::parse(bodies[b]);
    ASSERT_EQ(j["pairs"].size(), sizes[b]);
    EXPECT_EQ(j["pairs"][0]["premise"], "p" + std::to_string(b * 100));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    EXPECT_EQ(scores[i], IndexScore(pairs[i].premise, ""));
  }
  EXPECT_EQ(client.stats().batches, 3u);
}

TEST(GatewayTest, ParallelBatchesKeepOrder) {
  MockServer::Options opts;
  opts.score = IndexScore;
  MockServer server(opts);
  Endpoint e = Fast(server);
  e.batch_size = 7;
  e.parallelism = 4;
  GatewayClient client(e);
  const auto pairs = IndexedPairs(1000);
  const auto scores = client.ScorePairs(pairs);
  ASSERT_EQ(scores.size(), pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ASSERT_EQ(scores[i], IndexScore(pairs[i].premise, ""));
  }
  EXPECT_EQ(server.requests(), 143);
}

TEST(GatewayTest, ScoreOutOfRangeIsBadPayload) {
  MockServer::Options opts;
  opts.score_override = R"({"scores":[1.7]})";
  MockServer server(opts);
  GatewayClient client(Fast(server));
  try {
    client.ScorePairs(IndexedPairs(1));
    FAIL();
  } catch (const GatewayError &e) {
    EXPECT_EQ(e.kind(), GatewayErrorKind::kBadPayload);
    EXPECT_EQ(e.attempts(), 1);
    EXPECT_FALSE(e.request_digest().empty());
  }
}

TEST(GatewayTest, WrongLengthIsBadPayload) {
  MockServer::Options opts;
  opts.rewrite_override = R"({"outputs":[]})";
  MockServer server(opts);
  GatewayClient client(Fast(server));
  const std::vector<std::string> inputs = {"[REWRITE] [B] hi"};
  try {
    client.RewriteBatch(inputs);
    FAIL();
  } catch (const GatewayError &e) {
    EXPECT_EQ(e.kind(), GatewayErrorKind::kBadPayload);
  }
}

TEST(GatewayTest, RetriesThenSucceeds) {
  MockServer::Options opts;
  opts.fail_first = 2;
  opts.fail_status = 503;
  MockServer server(opts);
  GatewayClient client(Fast(server));
  const auto scores = client.ScorePairs(IndexedPairs(3));
  EXPECT_EQ(scores, (std::vector<double>{0.5, 0.5, 0.5}));
  EXPECT_EQ(server.requests(), 3);
  EXPECT_EQ(client.stats().retries, 2u);
  const auto bodies = server.bodies();
  EXPECT_EQ(bodies[0], bodies[1]);
  EXPECT_EQ(bodies[1], bodies[2]);
}

TEST(GatewayTest, RetriesExhausted) {
  MockServer::Options opts;
  opts.fail_first = 100;
  MockServer server(opts);
  GatewayClient client(Fast(server));
  try {
    client.ScorePairs(IndexedPairs(3));
    FAIL();
  } catch (const GatewayError &e) {
    EXPECT_EQ(e.kind(), GatewayErrorKind::kRemote5xx);
    EXPECT_EQ(e.attempts(), 3);
  }
  EXPECT_EQ(server.requests(), 3);
}

TEST(GatewayTest, ClientErrorIsNotRetried) {
  MockServer::Options opts;
  opts.fail_first = 100;
  opts.fail_status = 422;
  MockServer server(opts);
  GatewayClient client(Fast(server));
  try {
    client.ScorePairs(IndexedPairs(1));
    FAIL();
  } catch (const GatewayError &e) {
    EXPECT_EQ(e.kind(), GatewayErrorKind::kProtocol);
  }
  EXPECT_EQ(server.requests(), 1);
}

TEST(GatewayTest, TimeoutIsNetworkError) {
  MockServer::Options opts;
  opts.delay = std::chrono::milliseconds(400);
  MockServer server(opts);
  Endpoint e = Fast(server);
  e.timeout_s = 0.05;
  e.max_retries = 0;
  GatewayClient client(e);
  try {
    client.ScorePairs(IndexedPairs(1));
    FAIL();
  } catch (const GatewayError &err) {
    EXPECT_EQ(err.kind(), GatewayErrorKind::kNetwork);
  }
}

TEST(GatewayTest, UnreachableIsNetworkError) {
  Endpoint e;
  e.base_url = "http://127.0.0.1:1";
  e.max_retries = 0;
  e.timeout_s = 1.0;
  GatewayClient client(e);
  try {
    client.Health();
    FAIL();
  } catch (const GatewayError &err) {
    EXPECT_EQ(err.kind(), GatewayErrorKind::kNetwork);
  }
}

TEST(GatewayTest, Health) {
  MockServer server;
  GatewayClient client(Fast(server));
  const auto info = client.Health();
  EXPECT_EQ(info.status, "ok");
  EXPECT_EQ(info.model_name, "mock");

  MockServer::Options opts;
  opts.health_body = R"({"status":"ok"})";
  MockServer bad(opts);
  GatewayClient bad_client(Fast(bad));
  try {
    bad_client.Health();
    FAIL();
  } catch (const GatewayError &e) {
    EXPECT_EQ(e.kind(), GatewayErrorKind::kBadPayload);
  }
}

TEST(GatewayTest, InvalidEndpointRejected) {
  Endpoint e;
  e.batch_size = 0;
  EXPECT_THROW(GatewayClient{e}, InvalidArgument);
}

TEST(CacheTest, SecondRunSendsNothing) {
  MockServer::Options opts;
  opts.score = IndexScore;
  MockServer server(opts);
  const std::string path = TempPath("score_cache.jsonl");
  const auto pairs = IndexedPairs(250);
  std::vector<double> first;
  {
    auto service = std::make_shared<CachedModelService>(
        std::make_shared<GatewayClient>(Fast(server)),
        std::make_shared<ResponseCache>(path));
    first = service->ScorePairs(pairs);
  }
  EXPECT_EQ(server.requests(), 3);
  server.ResetCounters();
  auto cache = std::make_shared<ResponseCache>(path);
  EXPECT_EQ(cache->size(), 250u);
  CachedModelService again(std::make_shared<GatewayClient>(Fast(server)), cache);
  EXPECT_EQ(again.ScorePairs(pairs), first);
  EXPECT_EQ(server.requests(), 0);
}

TEST(CacheTest, PartialCacheSendsOnlyMisses) {
  MockServer::Options opts;
  opts.score = IndexScore;
  MockServer server(opts);
  const std::string path = TempPath("partial_score_cache.jsonl");
  auto cache = std::make_shared<ResponseCache>(path);
  CachedModelService service(std::make_shared<GatewayClient>(Fast(server)), cache);
  const auto all = IndexedPairs(40);
  const std::vector<TextPair> some(all.begin(), all.begin() + 15);
  service.ScorePairs(some);
  server.ResetCounters();
  const auto scores = service.ScorePairs(all);
  EXPECT_EQ(server.items(), 25);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(scores[i], IndexScore(all[i].premise, ""));
  }
}

TEST(CacheTest, DuplicatesInOneCallSentOnce) {
  MockServer server;
  CachedModelService service(std::make_shared<GatewayClient>(Fast(server)),
                             std::make_shared<ResponseCache>());
  const std::vector<TextPair> pairs = {{"a", "b"}, {"a", "b"}, {"c", "d"}};
  EXPECT_EQ(service.ScorePairs(pairs).size(), 3u);
  EXPECT_EQ(server.items(), 2);
}

TEST(CacheTest, CorruptLinesAreSkipped) {
  const std::string path = TempPath("corrupt_cache.jsonl");
  {
    ResponseCache cache(path);
    cache.Append("alpha", "1");
    cache.Append("beta", "2");
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "{not json\n";
    out << R"({"digest":"0000000000000000","input":"gamma","output":"3"})" << "\n";
    out << R"({"digest":"x")";  // torn tail, no newline
  }
  ResponseCache cache(path);
  EXPECT_EQ(cache.size(), 2u);
  EXPECT_EQ(cache.skipped_lines(), 3u);
  EXPECT_EQ(cache.Lookup("alpha"), "1");
  EXPECT_FALSE(cache.Lookup("gamma"));
  cache.Append("delta", "4");
  ResponseCache reread(path);
  EXPECT_EQ(reread.Lookup("delta"), "4");
}

TEST(CacheTest, DigestIsFnvHex) {
  EXPECT_EQ(ResponseCache::Digest(""), "cbf29ce484222325");
  EXPECT_EQ(ResponseCache::Digest("foobar"), "85944171f73967e8");
}

TEST(CacheTest, RewriteOutputsCached) {
  MockServer::Options opts;
  opts.rewrite_mode = MockServer::RewriteMode::kEchoTarget;
  MockServer server(opts);
  auto cache = std::make_shared<ResponseCache>();
  CachedModelService service(std::make_shared<GatewayClient>(Fast(server)), cache);
  const std::vector<std::string> inputs = {"[REWRITE] [B] one", "[H] x [REWRITE] [B] two"};
  EXPECT_EQ(service.RewriteBatch(inputs), (std::vector<std::string>{"one", "two"}));
  EXPECT_EQ(service.RewriteBatch(inputs), (std::vector<std::string>{"one", "two"}));
  EXPECT_EQ(server.requests(), 1);
}

}  // namespace
}  // namespace contra
