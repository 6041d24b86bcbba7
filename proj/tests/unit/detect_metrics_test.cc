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

#include <algorithm>
#include <numeric>

#include "contra/common/error.h"
#include "contra/detection/decision.h"
#include "contra/metrics/detect_metrics.h"
#include "oracles/oracles.h"
#include "support/generators.h"

namespace contra {
namespace {

using testing::Rng;

DetectionExample Gold(std::string id, int label, std::vector<int> evidence,
                      std::size_t bots = 4) {
  DetectionExample ex;
  ex.id = std::move(id);
  for (std::size_t b = 0; b < bots; ++b) {
    ex.turns.push_back({Speaker::kHuman, "h", 0});
    ex.turns.push_back({Speaker::kBot, "b", 0});
  }
  Renumber(&ex.turns);
  ex.gold_label = label;
  ex.gold_evidence = std::move(evidence);
  return ex;
}

PredictionRecord Pred(std::string id, int label, std::vector<int> evidence,
                      double score = 0.0) {
  return PredictionRecord{std::move(id), score, label, std::move(evidence), {}};
}

TEST(BinaryPrfTest, Cases) {
  const std::vector<int> gold = {1, 1, 0, 0};
  auto perfect = BinaryPrf(gold, gold);
  EXPECT_EQ(perfect.precision, 1.0);
  EXPECT_EQ(perfect.recall, 1.0);
  EXPECT_EQ(perfect.f1, 1.0);

  const std::vector<int> none = {0, 0, 0, 0};
  auto zero = BinaryPrf(gold, none);
  EXPECT_EQ(zero.precision, 0.0);
  EXPECT_EQ(zero.recall, 0.0);
  EXPECT_EQ(zero.f1, 0.0);

  ConfusionCounts counts;
  const std::vector<int> pred = {1, 0, 1, 0};
  auto half = BinaryPrf(gold, pred, &counts);
  EXPECT_EQ(half.precision, 0.5);
  EXPECT_EQ(half.recall, 0.5);
  EXPECT_EQ(half.f1, 0.5);
  EXPECT_EQ(counts.tp, 1u);
  EXPECT_EQ(counts.fp, 1u);
  EXPECT_EQ(counts.fn, 1u);
  EXPECT_EQ(counts.tn, 1u);
}

TEST(AlignTest, IdMismatchThrows) {
  std::vector<DetectionExample> gold = {Gold("a", 0, {})};
  std::vector<PredictionRecord> preds = {Pred("b", 0, {})};
  EXPECT_THROW(BinaryPrf(gold, preds), InvalidArgument);
  EXPECT_THROW(EvidencePrf(gold, preds), InvalidArgument);
  EXPECT_THROW(JointAccuracy(gold, preds), InvalidArgument);
}

TEST(AlignTest, OrderDoesNotMatter) {
  std::vector<DetectionExample> gold = {Gold("a", 1, {1}), Gold("b", 0, {})};
  std::vector<PredictionRecord> preds = {Pred("b", 0, {}), Pred("a", 1, {1})};
  EXPECT_EQ(BinaryPrf(gold, preds).f1, 1.0);
}

TEST(EvidencePrfTest, Cases) {
  std::vector<DetectionExample> gold = {Gold("a", 1, {1, 2})};
  EXPECT_EQ(EvidencePrf(gold, std::vector<PredictionRecord>{Pred("a", 1, {1, 2})}).f1, 1.0);

  const Prf partial = EvidencePrf(gold, std::vector<PredictionRecord>{Pred("a", 1, {2})});
  EXPECT_EQ(partial.precision, 1.0);
  EXPECT_EQ(partial.recall, 0.5);
  EXPECT_NEAR(partial.f1, 2.0 / 3.0, 1e-15);

  std::vector<DetectionExample> neg = {Gold("n", 0, {})};
  const Prf vacuous = EvidencePrf(neg, std::vector<PredictionRecord>{Pred("n", 1, {1})});
  EXPECT_EQ(vacuous.precision, 0.0);
  EXPECT_EQ(vacuous.recall, 0.0);
  EXPECT_EQ(vacuous.f1, 0.0);
}

TEST(EvidencePrfTest, NegativesOnlyWidenPrecisionDenominator) {
  std::vector<DetectionExample> gold = {Gold("a", 1, {1}), Gold("n", 0, {})};
  const Prf p = EvidencePrf(gold, std::vector<PredictionRecord>{Pred("a", 1, {1}),
                                                                Pred("n", 1, {2})});
  EXPECT_EQ(p.precision, 0.5);
  EXPECT_EQ(p.recall, 1.0);
}

TEST(JointAccuracyTest, SupersetRule) {
  std::vector<DetectionExample> gold = {Gold("a", 1, {2})};
  auto joint = [&](PredictionRecord p) {
    return JointAccuracy(gold, std::vector<PredictionRecord>{std::move(p)});
  };
  EXPECT_EQ(joint(Pred("a", 1, {2})), 1.0);
  EXPECT_EQ(joint(Pred("a", 1, {1, 2})), 1.0);
  EXPECT_EQ(joint(Pred("a", 1, {1})), 0.0);
  EXPECT_EQ(joint(Pred("a", 0, {})), 0.0);
}

TEST(JointAccuracyTest, NeverExceedsAccuracy) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<DetectionExample> gold;
    std::vector<PredictionRecord> preds;
    for (int i = 0; i < 40; ++i) {
      auto ex = testing::RandomDetectionExample(rng, "e" + std::to_string(i));
      std::size_t prior = 0;
      for (std::size_t t = 0; t + 1 < ex.turns.size(); ++t) {
        prior += ex.turns[t].speaker == Speaker::kBot ? 1 : 0;
      }
      preds.push_back(testing::RandomPrediction(rng, ex.id, prior));
      gold.push_back(std::move(ex));
    }
    const auto report = EvaluateDetection(gold, preds);
    ASSERT_LE(report.joint_accuracy, report.accuracy);
  }
}

TEST(AuprTest, HandCases) {
  const std::vector<int> gold = {1, 0, 1, 0};
  EXPECT_EQ(Aupr(gold, std::vector<double>{0.9, 0.1, 0.8, 0.2}), 1.0);
  EXPECT_NEAR(Aupr(gold, std::vector<double>{0.9, 0.8, 0.7, 0.6}),
              0.5 * 1.0 + 0.5 * (2.0 / 3.0), 1e-15);
  EXPECT_NEAR(Aupr(gold, std::vector<double>{0.3, 0.3, 0.3, 0.3}), 0.5, 1e-15);
}

TEST(AuprTest, Errors) {
  EXPECT_THROW(Aupr(std::vector<int>{0, 0}, std::vector<double>{0.1, 0.2}),
               InvalidArgument);
  EXPECT_THROW(Aupr(std::vector<int>{1}, std::vector<double>{0.1, 0.2}),
               InvalidArgument);
}

TEST(AuprTest, MatchesBruteForceSweepWithTies) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::Uniform(rng, 1, 300);
    std::vector<int> gold(n);
    std::vector<double> scores(n);
    const std::size_t levels = testing::Uniform(rng, 1, 20);
    for (std::size_t i = 0; i < n; ++i) {
      gold[i] = testing::Coin(rng, 0.3) ? 1 : 0;
      scores[i] = testing::Coin(rng) ? static_cast<double>(testing::Uniform(rng, 0, levels)) / levels
                                     : std::uniform_real_distribution<double>(0, 1)(rng);
    }
    gold[testing::Uniform(rng, 0, n - 1)] = 1;
    ASSERT_NEAR(Aupr(gold, scores), oracle::BruteForceAp(gold, scores), 1e-9);
  }
}

TEST(AuprTest, PermutationInvariant) {
  Rng rng(4);
  std::vector<int> gold(100);
  std::vector<double> scores(100);
  for (int i = 0; i < 100; ++i) {
    gold[i] = i % 3 == 0;
    scores[i] = static_cast<double>(testing::Uniform(rng, 0, 9)) / 9.0;
  }
  const double base = Aupr(gold, scores);
  std::vector<std::size_t> perm(100);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> g2(100);
  std::vector<double> s2(100);
  for (int i = 0; i < 100; ++i) {
    g2[i] = gold[perm[i]];
    s2[i] = scores[perm[i]];
  }
  EXPECT_NEAR(Aupr(g2, s2), base, 1e-12);
}

TEST(EvaluateDetectionTest, PerfectOracleScorer) {
  std::vector<DetectionExample> gold = {Gold("a", 1, {2}), Gold("b", 0, {}),
                                        Gold("c", 1, {1, 3})};
  std::vector<PredictionRecord> preds;
  for (const auto &g : gold) {
    PredictionRecord p;
    p.id = g.id;
    p.pair_scores.assign(3, 0.1);
    for (int e : *g.gold_evidence) p.pair_scores[e - 1] = 0.9;
    preds.push_back(p);
  }
  const auto r = EvaluateDetection(gold, preds);
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 1.0);
  EXPECT_EQ(r.f1, 1.0);
  EXPECT_EQ(*r.aupr, 1.0);
  EXPECT_EQ(r.se_precision, 1.0);
  EXPECT_EQ(r.se_recall, 1.0);
  EXPECT_EQ(r.se_f1, 1.0);
  EXPECT_EQ(r.joint_accuracy, 1.0);
  EXPECT_EQ(r.counts.total(), 3u);
  EXPECT_EQ(r.examples, 3u);
}

TEST(EvaluateDetectionTest, RedecidesFromPairScores) {
  std::vector<DetectionExample> gold = {Gold("a", 1, {1})};
  // Stored label/evidence are stale; pair scores decide.
  std::vector<PredictionRecord> preds = {{"a", 0.0, 0, {}, {0.7, 0.2, 0.1}}};
  EXPECT_EQ(EvaluateDetection(gold, preds, {0.5, DetectionMode::kSub}).f1, 1.0);
  EXPECT_EQ(EvaluateDetection(gold, preds, {0.8, DetectionMode::kSub}).f1, 0.0);
}

TEST(EvaluateDetectionTest, ExtraNegativesNeverRaisePrecision) {
  Rng rng(31);
  std::vector<DetectionExample> balanced;
  std::vector<PredictionRecord> preds;
  for (int i = 0; i < 60; ++i) {
    auto ex = testing::RandomDetectionExample(rng, "e" + std::to_string(i));
    preds.push_back(testing::RandomPrediction(rng, ex.id, 3));
    balanced.push_back(ex);
  }
  std::vector<DetectionExample> unbalanced = balanced;
  for (int i = 0; i < 60; ++i) {
    unbalanced.push_back(Gold("neg" + std::to_string(i), 0, {}));
    preds.push_back(testing::RandomPrediction(rng, "neg" + std::to_string(i), 3));
  }
  std::vector<PredictionRecord> shared(preds.begin(), preds.begin() + 60);
  const auto b = EvaluateDetection(balanced, shared);
  const auto u = EvaluateDetection(unbalanced, preds);
  EXPECT_LE(u.precision, b.precision);
  EXPECT_EQ(u.recall, b.recall);
}

TEST(EvaluateDetectionTest, NoPositivesLeavesAuprEmpty) {
  std::vector<DetectionExample> gold = {Gold("a", 0, {})};
  std::vector<PredictionRecord> preds = {Pred("a", 0, {})};
  EXPECT_FALSE(EvaluateDetection(gold, preds).aupr.has_value());
}

}  // namespace
}  // namespace contra
