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

#ifndef CONTRA_METRICS_REWRITE_METRICS_H_
#define CONTRA_METRICS_REWRITE_METRICS_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contra/common/execution.h"
#include "contra/core/types.h"
#include "contra/metrics/tokenizer.h"

namespace contra {

// Token -> multiplicity.
using TokenCounts = std::map<std::string, std::size_t>;

// Tokens the rewrite added: count(rewritten) - count(original), floored at 0.
TokenCounts RestoredWords(const TokenSeq &original, const TokenSeq &rewritten);

// Multiset sizes behind one restoration P/R/F computation.
struct RestorationCounts {
  std::size_t matched = 0;       // |hyp restored ∩ ref restored|
  std::size_t hyp_restored = 0;  // n-grams of hyp holding a restored word
  std::size_t ref_restored = 0;  // same for the reference

  RestorationCounts &operator+=(const RestorationCounts &o) {
    matched += o.matched;
    hyp_restored += o.hyp_restored;
    ref_restored += o.ref_restored;
    return *this;
  }
};

struct RestorationScore {
  int n = 1;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Restored n-grams of a rewrite are its n-grams containing at least one word
// from RestoredWords(original, rewrite). Hypothesis and reference restored
// n-grams are intersected as multisets.
RestorationCounts RestorationNgramCounts(const TokenSeq &original,
                                         const TokenSeq &reference,
                                         const TokenSeq &hypothesis, int n);

// An empty denominator yields 1 when both sides are empty and 0 otherwise.
RestorationScore ScoreRestoration(const RestorationCounts &counts, int n);

RestorationScore RestorationPrf(const TokenSeq &original,
                                const TokenSeq &reference,
                                const TokenSeq &hypothesis, int n);

inline constexpr int kBleuMaxOrder = 4;

struct BleuStats {
  std::array<std::size_t, kBleuMaxOrder> matches{};
  std::array<std::size_t, kBleuMaxOrder> totals{};
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;

  BleuStats &operator+=(const BleuStats &o);
};

// Clipped n-gram matches (clip = max count over references) and the closest
// reference length, shorter on ties.
BleuStats SentenceBleuStats(const TokenSeq &hyp,
                            std::span<const TokenSeq> refs);

// Geometric mean of the modified precisions over orders that have at least
// one hypothesis n-gram, times the brevity penalty. No smoothing: any such
// order with zero matches gives 0.
double BleuFromStats(const BleuStats &stats);

// Corpus BLEU-4. Throws InvalidArgument on empty or misaligned input.
double Bleu(std::span<const TokenSeq> hyps,
            std::span<const std::vector<TokenSeq>> refs,
            Execution exec = Execution::kParallel);

// Sentence-level F1 (beta = 1) against the best reference.
double RougeN(const TokenSeq &hyp, std::span<const TokenSeq> refs, int n);
double RougeL(const TokenSeq &hyp, std::span<const TokenSeq> refs);

std::size_t LcsLength(const TokenSeq &a, const TokenSeq &b);

// Arithmetic means of the sentence scores.
double CorpusRougeN(std::span<const TokenSeq> hyps,
                    std::span<const std::vector<TokenSeq>> refs, int n,
                    Execution exec = Execution::kParallel);
double CorpusRougeL(std::span<const TokenSeq> hyps,
                    std::span<const std::vector<TokenSeq>> refs,
                    Execution exec = Execution::kParallel);

// 1 iff hyp equals a reference after trimming, whitespace collapsing and case
// folding. Punctuation is significant.
int ExactMatch(std::string_view hyp, std::span<const std::string> refs);

// Whether the rewrite differs from the original once case and punctuation
// tokens are ignored.
bool IsChanged(std::string_view original, std::string_view rewritten);

// Fraction of (original, rewritten) pairs that changed.
double ChangeRate(std::span<const std::pair<std::string, std::string>> pairs,
                  Execution exec = Execution::kParallel);

struct RewriteEvalReport {
  double bleu = 0.0;
  double rouge1 = 0.0;
  double rougeL = 0.0;
  double em = 0.0;
  double restoration_f1 = 0.0;
  double restoration_precision = 0.0;
  double restoration_recall = 0.0;
  double change_rate = 0.0;
  std::size_t items = 0;
  std::size_t references = 0;
  int restoration_n = 1;
};

struct RewriteEvalOptions {
  int restoration_n = 1;
  Execution exec = Execution::kParallel;
};

// Scores hypotheses against reference sets, each item relative to its
// original utterance. Restoration P/R/F is micro-averaged over items, using
// for each item the reference that gives the best item F1.
RewriteEvalReport EvaluateRewriteCorpus(
    std::span<const std::string> originals,
    std::span<const std::string> hypotheses,
    std::span<const std::vector<std::string>> references,
    const RewriteEvalOptions &options = {});

// Uses each example's hypothesis and target text. Throws InvalidArgument when
// a hypothesis is missing.
RewriteEvalReport EvaluateRewrites(std::span<const RewriteExample> examples,
                                   const RewriteEvalOptions &options = {});

// Agreement between two annotators: the first rewrite plays the hypothesis,
// the second the sole reference.
RewriteEvalReport InterAnnotatorAgreement(
    std::span<const std::pair<std::string, std::string>> rewrite_pairs,
    std::span<const std::string> originals,
    const RewriteEvalOptions &options = {});

RewriteEvalReport InterAnnotatorAgreement(
    std::span<const RewriteExample> examples,
    const RewriteEvalOptions &options = {});

// Percentages (0-100) over the items carrying the relevant annotation.
struct HumanEvalSummary {
  std::optional<double> correct;
  std::optional<double> complete;
  std::optional<double> coreference;
  std::optional<double> ellipsis;
  std::optional<double> incomplete;  // coreference OR ellipsis
  std::size_t judged = 0;
  std::size_t flagged = 0;
};

// Throws InvalidArgument when no example carries flags or human_eval.
HumanEvalSummary SummarizeHumanEval(std::span<const RewriteExample> examples);

}  // namespace contra

#endif  // CONTRA_METRICS_REWRITE_METRICS_H_
