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

#ifndef CONTRA_TESTS_ORACLES_ORACLES_H_
#define CONTRA_TESTS_ORACLES_ORACLES_H_

// Deliberately naive re-implementations used as test oracles. They share no
// code with the library beyond the token type and favour obviousness over
// speed.

#include <string>
#include <vector>

namespace contra::oracle {

using Tokens = std::vector<std::string>;

// Sweeps every distinct score as a threshold (predict positive when score >=
// t), recounting the confusion matrix from scratch each time, and sums
// (R_t - R_prev) * P_t in descending threshold order.
double BruteForceAp(const std::vector<int> &gold,
                    const std::vector<double> &scores);

struct Prf {
  double p = 0.0, r = 0.0, f = 0.0;
};

// Restoration P/R/F by explicit n-gram lists and pairwise matching.
Prf NaiveRestoration(const Tokens &original, const Tokens &reference,
                     const Tokens &hypothesis, int n);

// The three multiset sizes behind NaiveRestoration.
struct RestorationTally {
  long matched = 0, hyp = 0, ref = 0;
};
RestorationTally NaiveRestorationTally(const Tokens &original,
                                       const Tokens &reference,
                                       const Tokens &hypothesis, int n);

// Corpus BLEU-4 with the same conventions as the library: orders without
// hypothesis n-grams are skipped, a zero-match order gives 0, closest
// reference length with ties to the shorter one.
double NaiveBleu(const std::vector<Tokens> &hyps,
                 const std::vector<std::vector<Tokens>> &refs);

// Full (n+1) x (m+1) table.
std::size_t Lcs2D(const Tokens &a, const Tokens &b);

// Mean over items of the best-reference F1.
double NaiveRougeN(const std::vector<Tokens> &hyps,
                   const std::vector<std::vector<Tokens>> &refs, int n);
double NaiveRougeL(const std::vector<Tokens> &hyps,
                   const std::vector<std::vector<Tokens>> &refs);

}  // namespace contra::oracle

#endif  // CONTRA_TESTS_ORACLES_ORACLES_H_
