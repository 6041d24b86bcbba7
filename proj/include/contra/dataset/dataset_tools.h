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

#ifndef CONTRA_DATASET_DATASET_TOOLS_H_
#define CONTRA_DATASET_DATASET_TOOLS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "contra/core/types.h"

namespace contra {

// 64-bit linear congruential generator (Knuth's MMIX constants):
//   state' = state * 6364136223846793005 + 1442695040888963407
// The first output is the state after one step from the seed. Below(n) maps
// an output into [0, n) by multiply-shift: (next * n) >> 64.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }
  std::uint64_t Below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(Next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Fisher-Yates, i from n-1 down to 1, j = Below(i + 1).
template <typename T>
void LcgShuffle(std::vector<T> *items, Lcg64 *rng) {
  for (std::size_t i = items->size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng->Below(i));
    std::swap((*items)[i - 1], (*items)[j]);
  }
}

// Drops dialogues of at most one exchange (<= 2 turns) and every dialogue
// whose (speaker, text) sequence is a prefix of another one. Of several
// identical dialogues the first survives. Survivors keep input order and ids.
std::vector<Dialogue> MergeOverlapping(std::span<const Dialogue> dialogues);

// One example per bot turn, ending at that turn, ordered by cut point. The
// k-th example (1-based over bot turns) gets id "<dialogue id>#<k>".
std::vector<DetectionExample> PrefixCut(const Dialogue &dialogue);
std::vector<DetectionExample> PrefixCutCorpus(std::span<const Dialogue> corpus);

// All positives plus an equal number of negatives drawn without replacement
// by an Lcg64 shuffle of the negatives. Output: positives, then sampled
// negatives, each in input order. Every example needs a gold label; throws
// InvalidArgument when negatives are fewer than positives.
std::vector<DetectionExample> BalancedSample(
    std::span<const DetectionExample> examples, std::uint64_t seed);

struct AnnotationVote {
  std::string annotator_id;
  int label = 0;
  std::vector<int> evidence;  // empty when label is 0

  bool operator==(const AnnotationVote &) const = default;
};

struct AdjudicationState {
  enum class Kind { kFinalized, kEscalatedRound2, kNeedsAdjudication };
  Kind kind = Kind::kNeedsAdjudication;
  // Meaningful only when finalized.
  int label = 0;
  std::vector<int> evidence;

  bool operator==(const AdjudicationState &) const = default;
};

// "finalized", "escalated_round2", "needs_adjudication".
std::string_view AdjudicationKindName(AdjudicationState::Kind kind);

// Three votes agree on the label and on the evidence set.
bool Unanimous(std::span<const AnnotationVote> votes);

// Union of the round's evidence sets, sorted: the proposal shown to round-2
// annotators.
std::vector<int> MaximumEvidence(std::span<const AnnotationVote> votes);

// Round-1 unanimity finalizes; otherwise round 2 is needed. Round-2
// unanimity finalizes; otherwise only an adjudicator vote does. An
// adjudicator vote is ignored until round 2 has been held and split.
// Each provided round must hold exactly 3 votes (InvalidArgument otherwise).
AdjudicationState Adjudicate(
    std::span<const AnnotationVote> round1,
    std::optional<std::span<const AnnotationVote>> round2 = std::nullopt,
    const std::optional<AnnotationVote> &adjudicator = std::nullopt);

// One line of a votes file.
struct VoteRecord {
  std::string id;
  int round = 1;  // 1, 2, or kAdjudicatorRound
  AnnotationVote vote;
};
inline constexpr int kAdjudicatorRound = 3;

// Newline-delimited {"id", "round": 1|2|"adjudicator", "annotator_id",
// "label", "evidence"}. Throws ValidationError with the line number.
std::vector<VoteRecord> ParseVotes(std::string_view text);

struct AdjudicationOutcome {
  std::string id;
  AdjudicationState state;
};

// Groups votes by id (first-appearance order) and adjudicates each group.
// Throws ValidationError when a group has a round with other than 3 votes, a
// round 2 without round 1, or more than one adjudicator vote.
std::vector<AdjudicationOutcome> AdjudicateVotes(
    std::span<const VoteRecord> votes);

// Copies finalized labels and evidence onto the matching examples. Examples
// without a finalized outcome are dropped.
std::vector<DetectionExample> ApplyAdjudication(
    std::span<const DetectionExample> examples,
    std::span<const AdjudicationOutcome> outcomes);

}  // namespace contra

#endif  // CONTRA_DATASET_DATASET_TOOLS_H_
