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

#include "contra/metrics/rewrite_metrics.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "contra/common/error.h"
#include "contra/common/parallel.h"
#include "contra/common/text.h"

namespace contra {

namespace {

using NgramCounts = std::unordered_map<std::string, std::size_t>;

// Tokens never contain U+001F, so joining on it is collision-free.
std::string NgramKey(const TokenSeq &tokens, std::size_t start, int n) {
  std::string key = tokens[start];
  for (int k = 1; k < n; ++k) {
    key += '\x1f';
    key += tokens[start + k];
  }
  return key;
}

std::size_t NgramTotal(const TokenSeq &tokens, int n) {
  return tokens.size() >= static_cast<std::size_t>(n) ? tokens.size() - n + 1
                                                      : 0;
}

NgramCounts CountNgrams(const TokenSeq &tokens, int n) {
  NgramCounts counts;
  const std::size_t total = NgramTotal(tokens, n);
  for (std::size_t i = 0; i < total; ++i) ++counts[NgramKey(tokens, i, n)];
  return counts;
}

std::size_t ClippedOverlap(const NgramCounts &hyp, const NgramCounts &ref) {
  std::size_t overlap = 0;
  for (const auto &[gram, count] : hyp) {
    auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

NgramCounts RestoredNgrams(const TokenSeq &tokens,
                           const TokenCounts &restored, int n) {
  NgramCounts counts;
  const std::size_t total = NgramTotal(tokens, n);
  for (std::size_t i = 0; i < total; ++i) {
    bool holds_restored = false;
    for (int k = 0; k < n && !holds_restored; ++k) {
      holds_restored = restored.count(tokens[i + k]) > 0;
    }
    if (holds_restored) ++counts[NgramKey(tokens, i, n)];
  }
  return counts;
}

std::size_t Total(const NgramCounts &counts) {
  std::size_t sum = 0;
  for (const auto &[gram, count] : counts) sum += count;
  return sum;
}

double F1(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

// F1 of an overlap count given both sides' totals; two empty sides agree.
double OverlapF1(std::size_t overlap, std::size_t hyp_total,
                 std::size_t ref_total) {
  if (hyp_total == 0 && ref_total == 0) return 1.0;
  if (hyp_total == 0 || ref_total == 0 || overlap == 0) return 0.0;
  return F1(static_cast<double>(overlap) / hyp_total,
            static_cast<double>(overlap) / ref_total);
}

void CheckAligned(std::size_t hyps, std::size_t refs) {
  if (hyps == 0) throw InvalidArgument("empty corpus");
  if (hyps != refs) {
    throw InvalidArgument("hypotheses and reference sets differ in length");
  }
}

void CheckRefs(std::span<const std::vector<TokenSeq>> refs) {
  for (const auto &set : refs) {
    if (set.empty()) throw InvalidArgument("empty reference set");
  }
}

double Mean(const std::vector<double> &values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

TokenSeq WithoutPunctuation(std::string_view s) {
  TokenSeq tokens = Tokenize(s);
  std::erase_if(tokens, [](const std::string &t) { return IsPunctuationToken(t); });
  return tokens;
}

}  // namespace

TokenCounts RestoredWords(const TokenSeq &original, const TokenSeq &rewritten) {
  TokenCounts counts;
  for (const auto &t : rewritten) ++counts[t];
  for (const auto &t : original) {
    auto it = counts.find(t);
    if (it != counts.end() && --it->second == 0) counts.erase(it);
  }
  return counts;
}

RestorationCounts RestorationNgramCounts(const TokenSeq &original,
                                         const TokenSeq &reference,
                                         const TokenSeq &hypothesis, int n) {
  if (n < 1) throw InvalidArgument("n-gram order must be >= 1");
  const NgramCounts hyp =
      RestoredNgrams(hypothesis, RestoredWords(original, hypothesis), n);
  const NgramCounts ref =
      RestoredNgrams(reference, RestoredWords(original, reference), n);
  return RestorationCounts{ClippedOverlap(hyp, ref), Total(hyp), Total(ref)};
}

RestorationScore ScoreRestoration(const RestorationCounts &c, int n) {
  RestorationScore s;
  s.n = n;
  const bool both_empty = c.hyp_restored == 0 && c.ref_restored == 0;
  auto ratio = [&](std::size_t denominator) {
    if (denominator == 0) return both_empty ? 1.0 : 0.0;
    return static_cast<double>(c.matched) / static_cast<double>(denominator);
  };
  s.precision = ratio(c.hyp_restored);
  s.recall = ratio(c.ref_restored);
  s.f1 = F1(s.precision, s.recall);
  return s;
}

RestorationScore RestorationPrf(const TokenSeq &original,
                                const TokenSeq &reference,
                                const TokenSeq &hypothesis, int n) {
  return ScoreRestoration(
      RestorationNgramCounts(original, reference, hypothesis, n), n);
}

BleuStats &BleuStats::operator+=(const BleuStats &o) {
  for (int k = 0; k < kBleuMaxOrder; ++k) {
    matches[k] += o.matches[k];
    totals[k] += o.totals[k];
  }
  hyp_length += o.hyp_length;
  ref_length += o.ref_length;
  return *this;
}

BleuStats SentenceBleuStats(const TokenSeq &hyp,
                            std::span<const TokenSeq> refs) {
  BleuStats stats;
  stats.hyp_length = hyp.size();
  std::size_t best_len = 0;
  std::size_t best_diff = static_cast<std::size_t>(-1);
  for (const TokenSeq &ref : refs) {
    const std::size_t diff = ref.size() > hyp.size() ? ref.size() - hyp.size()
                                                     : hyp.size() - ref.size();
    if (diff < best_diff || (diff == best_diff && ref.size() < best_len)) {
      best_diff = diff;
      best_len = ref.size();
    }
  }
  stats.ref_length = best_len;

  for (int n = 1; n <= kBleuMaxOrder; ++n) {
    const NgramCounts hyp_counts = CountNgrams(hyp, n);
    NgramCounts max_ref;
    for (const TokenSeq &ref : refs) {
      for (const auto &[gram, count] : CountNgrams(ref, n)) {
        std::size_t &slot = max_ref[gram];
        slot = std::max(slot, count);
      }
    }
    stats.matches[n - 1] = ClippedOverlap(hyp_counts, max_ref);
    stats.totals[n - 1] = NgramTotal(hyp, n);
  }
  return stats;
}

double BleuFromStats(const BleuStats &stats) {
  if (stats.hyp_length == 0) return 0.0;
  double log_sum = 0.0;
  int orders = 0;
  for (int k = 0; k < kBleuMaxOrder; ++k) {
    if (stats.totals[k] == 0) continue;
    if (stats.matches[k] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(stats.matches[k]) /
                        static_cast<double>(stats.totals[k]));
    ++orders;
  }
  if (orders == 0) return 0.0;
  const double c = static_cast<double>(stats.hyp_length);
  const double r = static_cast<double>(stats.ref_length);
  const double brevity = c < r ? std::exp(1.0 - r / c) : 1.0;
  return brevity * std::exp(log_sum / orders);
}

double Bleu(std::span<const TokenSeq> hyps,
            std::span<const std::vector<TokenSeq>> refs, Execution exec) {
  CheckAligned(hyps.size(), refs.size());
  CheckRefs(refs);
  const auto per_item = MapItems<BleuStats>(
      hyps.size(), exec,
      [&](std::size_t i) { return SentenceBleuStats(hyps[i], refs[i]); });
  BleuStats total;
  for (const BleuStats &s : per_item) total += s;
  return BleuFromStats(total);
}

double RougeN(const TokenSeq &hyp, std::span<const TokenSeq> refs, int n) {
  if (n < 1) throw InvalidArgument("n-gram order must be >= 1");
  if (refs.empty()) throw InvalidArgument("empty reference set");
  const NgramCounts hyp_counts = CountNgrams(hyp, n);
  const std::size_t hyp_total = NgramTotal(hyp, n);
  double best = 0.0;
  for (const TokenSeq &ref : refs) {
    const std::size_t overlap = ClippedOverlap(hyp_counts, CountNgrams(ref, n));
    best = std::max(best, OverlapF1(overlap, hyp_total, NgramTotal(ref, n)));
  }
  return best;
}

std::size_t LcsLength(const TokenSeq &a, const TokenSeq &b) {
  const TokenSeq &outer = a.size() >= b.size() ? a : b;
  const TokenSeq &inner = a.size() >= b.size() ? b : a;
  std::vector<std::size_t> prev(inner.size() + 1, 0);
  std::vector<std::size_t> cur(inner.size() + 1, 0);
  for (const std::string &x : outer) {
    for (std::size_t j = 1; j <= inner.size(); ++j) {
      cur[j] = x == inner[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[inner.size()];
}

double RougeL(const TokenSeq &hyp, std::span<const TokenSeq> refs) {
  if (refs.empty()) throw InvalidArgument("empty reference set");
  double best = 0.0;
  for (const TokenSeq &ref : refs) {
    best = std::max(best, OverlapF1(LcsLength(hyp, ref), hyp.size(), ref.size()));
  }
  return best;
}

double CorpusRougeN(std::span<const TokenSeq> hyps,
                    std::span<const std::vector<TokenSeq>> refs, int n,
                    Execution exec) {
  CheckAligned(hyps.size(), refs.size());
  CheckRefs(refs);
  if (n < 1) throw InvalidArgument("n-gram order must be >= 1");
  return Mean(MapItems<double>(hyps.size(), exec, [&](std::size_t i) {
    return RougeN(hyps[i], refs[i], n);
  }));
}

double CorpusRougeL(std::span<const TokenSeq> hyps,
                    std::span<const std::vector<TokenSeq>> refs,
                    Execution exec) {
  CheckAligned(hyps.size(), refs.size());
  CheckRefs(refs);
  return Mean(MapItems<double>(hyps.size(), exec, [&](std::size_t i) {
    return RougeL(hyps[i], refs[i]);
  }));
}

int ExactMatch(std::string_view hyp, std::span<const std::string> refs) {
  const std::string norm = text::FoldCase(text::CollapseWhitespace(hyp));
  for (const std::string &ref : refs) {
    if (text::FoldCase(text::CollapseWhitespace(ref)) == norm) return 1;
  }
  return 0;
}

bool IsChanged(std::string_view original, std::string_view rewritten) {
  return WithoutPunctuation(original) != WithoutPunctuation(rewritten);
}

double ChangeRate(std::span<const std::pair<std::string, std::string>> pairs,
                  Execution exec) {
  if (pairs.empty()) throw InvalidArgument("change rate of an empty list");
  const auto changed = MapItems<int>(pairs.size(), exec, [&](std::size_t i) {
    return IsChanged(pairs[i].first, pairs[i].second) ? 1 : 0;
  });
  std::size_t count = 0;
  for (int c : changed) count += static_cast<std::size_t>(c);
  return static_cast<double>(count) / static_cast<double>(pairs.size());
}

RewriteEvalReport EvaluateRewriteCorpus(
    std::span<const std::string> originals,
    std::span<const std::string> hypotheses,
    std::span<const std::vector<std::string>> references,
    const RewriteEvalOptions &options) {
  CheckAligned(hypotheses.size(), references.size());
  if (originals.size() != hypotheses.size()) {
    throw InvalidArgument("originals and hypotheses differ in length");
  }
  if (options.restoration_n < 1) {
    throw InvalidArgument("restoration n-gram order must be >= 1");
  }
  const std::size_t n = hypotheses.size();
  const Execution exec = options.exec;

  struct Item {
    TokenSeq original;
    TokenSeq hyp;
    std::vector<TokenSeq> refs;
  };
  std::size_t ref_count = 0;
  for (const auto &set : references) {
    if (set.empty()) throw InvalidArgument("empty reference set");
    ref_count += set.size();
  }
  const auto items = MapItems<Item>(n, exec, [&](std::size_t i) {
    Item item;
    item.original = Tokenize(originals[i]);
    item.hyp = Tokenize(hypotheses[i]);
    for (const std::string &r : references[i]) item.refs.push_back(Tokenize(r));
    return item;
  });

  std::vector<TokenSeq> hyps(n);
  std::vector<std::vector<TokenSeq>> refs(n);
  for (std::size_t i = 0; i < n; ++i) {
    hyps[i] = items[i].hyp;
    refs[i] = items[i].refs;
  }

  RewriteEvalReport report;
  report.items = n;
  report.references = ref_count;
  report.restoration_n = options.restoration_n;
  report.bleu = Bleu(hyps, refs, exec);
  report.rouge1 = CorpusRougeN(hyps, refs, 1, exec);
  report.rougeL = CorpusRougeL(hyps, refs, exec);

  const auto em = MapItems<int>(n, exec, [&](std::size_t i) {
    return ExactMatch(hypotheses[i], references[i]);
  });
  std::size_t em_count = 0;
  for (int v : em) em_count += static_cast<std::size_t>(v);
  report.em = static_cast<double>(em_count) / static_cast<double>(n);

  const int order = options.restoration_n;
  const auto restoration =
      MapItems<RestorationCounts>(n, exec, [&](std::size_t i) {
        RestorationCounts best;
        double best_f1 = -1.0;
        for (const TokenSeq &ref : items[i].refs) {
          const RestorationCounts c =
              RestorationNgramCounts(items[i].original, ref, items[i].hyp, order);
          const double f1 = ScoreRestoration(c, order).f1;
          if (f1 > best_f1) {
            best_f1 = f1;
            best = c;
          }
        }
        return best;
      });
  RestorationCounts total;
  for (const auto &c : restoration) total += c;
  const RestorationScore rs = ScoreRestoration(total, order);
  report.restoration_precision = rs.precision;
  report.restoration_recall = rs.recall;
  report.restoration_f1 = rs.f1;

  const auto changed = MapItems<int>(n, exec, [&](std::size_t i) {
    return IsChanged(originals[i], hypotheses[i]) ? 1 : 0;
  });
  std::size_t changed_count = 0;
  for (int v : changed) changed_count += static_cast<std::size_t>(v);
  report.change_rate =
      static_cast<double>(changed_count) / static_cast<double>(n);
  return report;
}

RewriteEvalReport EvaluateRewrites(std::span<const RewriteExample> examples,
                                   const RewriteEvalOptions &options) {
  std::vector<std::string> originals, hyps;
  std::vector<std::vector<std::string>> refs;
  for (const RewriteExample &ex : examples) {
    if (!ex.hypothesis) {
      throw InvalidArgument("example " + ex.id + " has no hypothesis");
    }
    originals.push_back(ex.target.text);
    hyps.push_back(*ex.hypothesis);
    refs.push_back(ex.references);
  }
  return EvaluateRewriteCorpus(originals, hyps, refs, options);
}

RewriteEvalReport InterAnnotatorAgreement(
    std::span<const std::pair<std::string, std::string>> rewrite_pairs,
    std::span<const std::string> originals,
    const RewriteEvalOptions &options) {
  std::vector<std::string> hyps;
  std::vector<std::vector<std::string>> refs;
  for (const auto &[a, b] : rewrite_pairs) {
    hyps.push_back(a);
    refs.push_back({b});
  }
  return EvaluateRewriteCorpus(originals, hyps, refs, options);
}

RewriteEvalReport InterAnnotatorAgreement(
    std::span<const RewriteExample> examples,
    const RewriteEvalOptions &options) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> originals;
  for (const RewriteExample &ex : examples) {
    if (ex.references.size() < 2) {
      throw InvalidArgument("example " + ex.id + " lacks a second reference");
    }
    pairs.emplace_back(ex.references[0], ex.references[1]);
    originals.push_back(ex.target.text);
  }
  return InterAnnotatorAgreement(pairs, originals, options);
}

HumanEvalSummary SummarizeHumanEval(std::span<const RewriteExample> examples) {
  HumanEvalSummary s;
  std::size_t correct = 0, complete = 0, coref = 0, ellipsis = 0, incomplete = 0;
  for (const RewriteExample &ex : examples) {
    if (ex.human_eval) {
      ++s.judged;
      correct += ex.human_eval->correct ? 1 : 0;
      complete += ex.human_eval->complete ? 1 : 0;
    }
    if (ex.flags) {
      ++s.flagged;
      coref += ex.flags->has_coreference ? 1 : 0;
      ellipsis += ex.flags->has_ellipsis ? 1 : 0;
      incomplete += (ex.flags->has_coreference || ex.flags->has_ellipsis) ? 1 : 0;
    }
  }
  if (s.judged == 0 && s.flagged == 0) {
    throw InvalidArgument("no example carries human_eval or flags labels");
  }
  auto pct = [](std::size_t k, std::size_t total) {
    return 100.0 * static_cast<double>(k) / static_cast<double>(total);
  };
  if (s.judged > 0) {
    s.correct = pct(correct, s.judged);
    s.complete = pct(complete, s.judged);
  }
  if (s.flagged > 0) {
    s.coreference = pct(coref, s.flagged);
    s.ellipsis = pct(ellipsis, s.flagged);
    s.incomplete = pct(incomplete, s.flagged);
  }
  return s;
}

}  // namespace contra
