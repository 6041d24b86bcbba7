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
#include <atomic>
#include <numeric>

#include "contra/common/error.h"
#include "contra/common/file_util.h"
#include "contra/common/fnv1a.h"
#include "contra/detection/detector.h"
#include "contra/detection/scorer.h"
#include "contra/gateway/endpoint.h"
#include "support/generators.h"

namespace contra {
namespace {

using testing::Rng;

DetectionExample SingerDialogue() {
  DetectionExample ex;
  ex.id = "singer";
  ex.turns = {
      {Speaker::kHuman, "Hi, what's your favorite singer?", 0},
      {Speaker::kBot, "Mine is johnny cash of course.", 0},
      {Speaker::kHuman, "He's amazing, I love his songs.", 0},
      {Speaker::kBot, "I never got to see johnny cash play but I wish I did.", 0},
      {Speaker::kHuman, "Same, I wish I could go to one of his concerts.", 0},
      {Speaker::kBot, "I have not been since last year though. I like sports.", 0}};
  Renumber(&ex.turns);
  return ex;
}

DetectionExample FromPattern(std::string_view pattern) {
  DetectionExample ex;
  ex.id = "p";
  int k = 0;
  for (char c : pattern) {
    ex.turns.push_back({c == 'H' ? Speaker::kHuman : Speaker::kBot,
                        std::string(1, c) + std::to_string(k++), 0});
  }
  Renumber(&ex.turns);
  return ex;
}

// Returns preset scores per premise; counts the pairs it is asked for.
class ScriptedScorer : public PairScorer {
 public:
  explicit ScriptedScorer(std::vector<double> scores) : scores_(std::move(scores)) {}
  std::vector<double> ScorePairs(std::span<const TextPair> pairs) override {
    ++calls;
    requested += pairs.size();
    std::vector<double> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      out.push_back(scores_[(offset_ + i) % scores_.size()]);
    }
    offset_ += pairs.size();
    return out;
  }
  int calls = 0;
  std::size_t requested = 0;

 private:
  std::vector<double> scores_;
  std::size_t offset_ = 0;
};

TEST(MakePairsTest, SubOnSingerDialogue) {
  const auto pairs = MakePairs(SingerDialogue(), DetectionMode::kSub);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].premise, "Mine is johnny cash of course.");
  EXPECT_EQ(pairs[1].premise, "I never got to see johnny cash play but I wish I did.");
  EXPECT_EQ(pairs[0].hypothesis, "I have not been since last year though. I like sports.");
  EXPECT_EQ(pairs[1].hypothesis, pairs[0].hypothesis);
}

TEST(MakePairsTest, NoPriorBots) {
  EXPECT_TRUE(MakePairs(FromPattern("HB"), DetectionMode::kSub).empty());
  EXPECT_TRUE(MakePairs(FromPattern("HB"), DetectionMode::kSubConcat).empty());
}

TEST(MakePairsTest, SubConcatPrefixesPrecedingHuman) {
  const auto pairs = MakePairs(FromPattern("HBHB"), DetectionMode::kSubConcat);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].premise, "H0 B1");
  EXPECT_EQ(pairs[0].hypothesis, "H2 B3");
  // A bot turn preceded by a bot turn stays alone.
  const auto bare = MakePairs(FromPattern("BBHB"), DetectionMode::kSubConcat);
  ASSERT_EQ(bare.size(), 2u);
  EXPECT_EQ(bare[0].premise, "B0");
  EXPECT_EQ(bare[1].premise, "B1");
}

TEST(MakePairsTest, UnstructuredSinglePair) {
  const auto pairs = MakePairs(FromPattern("HBHB"), DetectionMode::kUnstructured);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].premise, "[H] H0 [B] B1 [H] H2");
  EXPECT_EQ(pairs[0].hypothesis, "B3");
}

TEST(MakePairsTest, TrailingHumanRejected) {
  EXPECT_THROW(MakePairs(FromPattern("HBH"), DetectionMode::kSub), InvalidArgument);
}

TEST(DetectTest, MaxAndThreshold) {
  ScriptedScorer scorer({0.2, 0.7, 0.4});
  const auto rec = Detect(FromPattern("BBBB"), scorer, {});
  EXPECT_EQ(rec.score, 0.7);
  EXPECT_EQ(rec.label, 1);
  EXPECT_EQ(rec.evidence, std::vector<int>{2});
  EXPECT_EQ(rec.pair_scores, (std::vector<double>{0.2, 0.7, 0.4}));
}

TEST(DetectTest, NoPriorBotsIsNegative) {
  ScriptedScorer scorer({0.9});
  const auto rec = Detect(FromPattern("HB"), scorer, {});
  EXPECT_EQ(rec.score, 0.0);
  EXPECT_EQ(rec.label, 0);
  EXPECT_TRUE(rec.evidence.empty());
  EXPECT_EQ(scorer.calls, 0);
}

TEST(DetectTest, StrictBoundary) {
  ScriptedScorer scorer({0.5});
  const auto rec = Detect(FromPattern("BB"), scorer, {DetectionMode::kSub, 0.5});
  EXPECT_EQ(rec.label, 0);
  EXPECT_TRUE(rec.evidence.empty());
}

TEST(DetectTest, UnstructuredHasNoEvidence) {
  ScriptedScorer scorer({0.9});
  const auto rec = Detect(FromPattern("HBHB"), scorer, {DetectionMode::kUnstructured, 0.5});
  EXPECT_EQ(rec.pair_scores.size(), 1u);
  EXPECT_EQ(rec.label, 1);
  EXPECT_TRUE(rec.evidence.empty());
}

TEST(DetectTest, EtaMustBeOpenUnitInterval) {
  MockScorer scorer;
  EXPECT_THROW(Detect(SingerDialogue(), scorer, {DetectionMode::kSub, 1.0}), InvalidArgument);
  EXPECT_THROW(Detect(SingerDialogue(), scorer, {DetectionMode::kSub, 0.0}), InvalidArgument);
}

TEST(ScorerTest, MockIsFnvOverTwoToThe64) {
  const TextPair p{"a", "b"};
  EXPECT_EQ(MockScorer::Score(p), std::ldexp(static_cast<double>(Fnv1a64("a\x1f" "b")), -64));
  const double s = MockScorer::Score(p);
  EXPECT_GE(s, 0.0);
  EXPECT_LT(s, 1.0);
}

TEST(ScorerTest, OverlapIsTokenF1) {
  EXPECT_DOUBLE_EQ(OverlapScorer::Score({"The cat sat.", "the cat sat"}), 6.0 / 7.0);
  EXPECT_EQ(OverlapScorer::Score({"a b", "c d"}), 0.0);
  EXPECT_EQ(OverlapScorer::Score({"Same thing", "same THING"}), 1.0);
}

TEST(ScorerTest, SerialAndParallelAgree) {
  Rng rng(9);
  std::vector<TextPair> pairs;
  for (int i = 0; i < 500; ++i) {
    pairs.push_back({testing::RandomSentence(rng), testing::RandomSentence(rng)});
  }
  MockScorer ms(Execution::kSerial), mp(Execution::kParallel);
  OverlapScorer os(Execution::kSerial), op(Execution::kParallel);
  EXPECT_EQ(ms.ScorePairs(pairs), mp.ScorePairs(pairs));
  EXPECT_EQ(os.ScorePairs(pairs), op.ScorePairs(pairs));
}

TEST(DetectWithRewritingTest, IdentityEqualsPlainDetect) {
  Rng rng(10);
  MockScorer scorer;
  for (int i = 0; i < 50; ++i) {
    const auto ex = testing::RandomDetectionExample(rng, "e" + std::to_string(i));
    EXPECT_EQ(DetectWithRewriting(ex, IdentityRewriter{}, scorer, {}),
              Detect(ex, scorer, {}));
  }
}

TEST(DetectWithRewritingTest, RuleRewriteRaisesOverlapScore) {
  DetectionExample ex;
  ex.id = "r";
  ex.turns = {{Speaker::kHuman, "Who do you like?", 0},
              {Speaker::kBot, "Mine is johnny cash.", 1},
              {Speaker::kHuman, "Really?", 2},
              {Speaker::kBot, "My favorite singer is johnny cash.", 3}};
  OverlapScorer scorer;
  const RuleTable rules(std::vector<RewriteRule>{{"Mine", "My favorite singer"}});
  const auto before = Detect(ex, scorer, {});
  const auto after = DetectWithRewriting(ex, rules, scorer, {});
  EXPECT_GT(after.score, before.score);
  EXPECT_EQ(after.score, 1.0);
}

TEST(ScoreCorpusTest, EmptyAndDeterministic) {
  MockScorer scorer;
  EXPECT_TRUE(ScoreCorpus({}, scorer, {}).records.empty());
  Rng rng(11);
  std::vector<DetectionExample> corpus;
  for (int i = 0; i < 100; ++i) {
    corpus.push_back(testing::RandomDetectionExample(rng, "e" + std::to_string(i)));
  }
  const auto a = ScoreCorpus(corpus, scorer, {});
  const auto b = ScoreCorpus(corpus, scorer, {}, {7});
  EXPECT_EQ(a.records, b.records);
  ASSERT_EQ(a.records.size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(a.records[i].id, corpus[i].id);
    EXPECT_EQ(a.records[i], Detect(corpus[i], scorer, {}));
  }
}

TEST(ScoreCorpusTest, RequestsExactlyTheTotalPairCount) {
  Rng rng(12);
  std::vector<DetectionExample> corpus;
  std::size_t total = 0;
  for (int i = 0; i < 80; ++i) {
    corpus.push_back(testing::RandomDetectionExample(rng, "e" + std::to_string(i)));
    total += MakePairs(corpus.back(), DetectionMode::kSub).size();
  }
  ScriptedScorer scorer({0.1, 0.6, 0.3});
  const auto result = ScoreCorpus(corpus, scorer, {}, {16});
  EXPECT_EQ(scorer.requested, total);
  EXPECT_EQ(result.pairs_scored, total);
  EXPECT_EQ(scorer.calls, 5);
}

TEST(ScoreCorpusTest, FailuresArePinnedToExamples) {
  // Fails any call containing the poisoned premise.
  class Poisoned : public PairScorer {
   public:
    std::vector<double> ScorePairs(std::span<const TextPair> pairs) override {
      for (const auto &p : pairs) {
        if (p.premise == "poison") {
          throw GatewayError(GatewayErrorKind::kRemote5xx, "abc", 4, "boom");
        }
      }
      return std::vector<double>(pairs.size(), 0.9);
    }
  } scorer;
  std::vector<DetectionExample> corpus;
  for (int i = 0; i < 6; ++i) {
    DetectionExample ex = FromPattern("HBHB");
    ex.id = "e" + std::to_string(i);
    if (i == 3) ex.turns[1].text = "poison";
    corpus.push_back(ex);
  }
  const auto result = ScoreCorpus(corpus, scorer, {}, {4});
  ASSERT_EQ(result.failures.size(), 1u);
  EXPECT_EQ(result.failures[0].index, 3u);
  EXPECT_EQ(result.failures[0].id, "e3");
  EXPECT_TRUE(result.failures[0].remote);
  EXPECT_EQ(result.records.size(), 5u);
}

// Property suite over generated examples with an arbitrary scorer.
class SubPropertyTest : public ::testing::Test {
 protected:
  void SetUp() override {
    Rng rng(4242);
    for (int i = 0; i < 1000; ++i) {
      examples_.push_back(testing::RandomDetectionExample(rng, "e" + std::to_string(i), false));
    }
  }
  std::vector<DetectionExample> examples_;
};

TEST_F(SubPropertyTest, LabelIffEvidence) {
  MockScorer scorer;
  for (const auto &ex : examples_) {
    for (double eta : {0.1, 0.5, 0.9}) {
      const auto rec = Detect(ex, scorer, {DetectionMode::kSub, eta});
      ASSERT_EQ(rec.label == 1, !rec.evidence.empty());
      const double max = rec.pair_scores.empty()
                             ? 0.0
                             : *std::max_element(rec.pair_scores.begin(), rec.pair_scores.end());
      ASSERT_EQ(rec.score, max);
    }
  }
}

TEST_F(SubPropertyTest, EvidenceMonotoneInEta) {
  MockScorer scorer;
  for (const auto &ex : examples_) {
    const auto lo = Detect(ex, scorer, {DetectionMode::kSub, 0.3});
    const auto hi = Detect(ex, scorer, {DetectionMode::kSub, 0.7});
    ASSERT_TRUE(std::includes(lo.evidence.begin(), lo.evidence.end(),
                              hi.evidence.begin(), hi.evidence.end()));
    ASSERT_LE(hi.label, lo.label);
  }
}

TEST_F(SubPropertyTest, PermutingPriorBotsPermutesEvidence) {
  MockScorer scorer;
  Rng rng(77);
  for (const auto &ex : examples_) {
    std::vector<std::size_t> bots;
    for (std::size_t k = 0; k + 1 < ex.turns.size(); ++k) {
      if (ex.turns[k].speaker == Speaker::kBot) bots.push_back(k);
    }
    std::vector<std::size_t> perm(bots.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    DetectionExample moved = ex;
    for (std::size_t j = 0; j < bots.size(); ++j) {
      moved.turns[bots[j]].text = ex.turns[bots[perm[j]]].text;
    }
    const auto a = Detect(ex, scorer, {});
    const auto b = Detect(moved, scorer, {});
    ASSERT_EQ(a.score, b.score);
    std::vector<int> mapped;
    for (int e : b.evidence) mapped.push_back(static_cast<int>(perm[e - 1]) + 1);
    std::sort(mapped.begin(), mapped.end());
    ASSERT_EQ(mapped, a.evidence);
  }
}

}  // namespace
}  // namespace contra
