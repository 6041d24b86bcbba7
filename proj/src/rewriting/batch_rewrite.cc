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

#include "contra/rewriting/batch_rewrite.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "contra/common/error.h"
#include "contra/gateway/endpoint.h"

namespace contra {

namespace {

struct Slot {
  std::size_t record;
  std::size_t turn;
  std::size_t input;  // index into the unique input list
};

struct Plan {
  std::vector<std::string> inputs;  // unique, first-seen order
  std::vector<Slot> slots;
  std::vector<bool> cached;
  RewriteStats stats;
};

template <typename Record>
Plan MakePlan(std::span<const Record> corpus, const BatchRewriteOptions &options,
              const ResponseCache *cache) {
  Plan plan;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t r = 0; r < corpus.size(); ++r) {
    const auto &turns = corpus[r].turns;
    for (std::size_t k = 0; k < turns.size(); ++k) {
      if (turns[k].speaker != Speaker::kBot) continue;
      ++plan.stats.bot_turns;
      std::string encoded =
          BuildRewriterInput(std::span(turns).first(k), turns[k],
                             options.max_context)
              .encoded;
      auto [it, inserted] = seen.emplace(encoded, plan.inputs.size());
      if (inserted) plan.inputs.push_back(std::move(encoded));
      plan.slots.push_back(Slot{r, k, it->second});
    }
  }
  plan.stats.unique_inputs = plan.inputs.size();
  plan.cached.assign(plan.inputs.size(), false);
  if (cache != nullptr) {
    for (std::size_t i = 0; i < plan.inputs.size(); ++i) {
      plan.cached[i] = cache->Lookup(plan.inputs[i]).has_value();
      plan.stats.cache_hits += plan.cached[i] ? 1 : 0;
    }
  }
  plan.stats.remote_items = plan.stats.unique_inputs - plan.stats.cache_hits;
  return plan;
}

template <typename Record>
std::vector<Record> RewriteLocal(std::span<const Record> corpus,
                                 const RewriterKind &kind,
                                 const BatchRewriteOptions &options,
                                 RewriteStats *stats) {
  std::vector<Record> out;
  out.reserve(corpus.size());
  RewriteStats local;
  for (const Record &record : corpus) {
    local.bot_turns += static_cast<std::size_t>(std::count_if(
        record.turns.begin(), record.turns.end(),
        [](const Utterance &u) { return u.speaker == Speaker::kBot; }));
    out.push_back(RewriteDialogueBots(record, kind, options.max_context));
  }
  if (stats != nullptr) *stats = local;
  return out;
}

template <typename Record>
std::vector<Record> RewriteRemote(std::span<const Record> corpus,
                                  const RemoteRewriter &remote,
                                  const BatchRewriteOptions &options,
                                  ResponseCache *cache, RewriteStats *stats) {
  if (!remote.service) throw InvalidArgument("remote rewriter has no service");
  Plan plan = MakePlan(corpus, options, cache);
  std::vector<std::string> outputs(plan.inputs.size());
  std::vector<std::size_t> misses;
  for (std::size_t i = 0; i < plan.inputs.size(); ++i) {
    if (plan.cached[i]) {
      outputs[i] = *cache->Lookup(plan.inputs[i]);
    } else {
      misses.push_back(i);
    }
  }

  const std::size_t chunk = std::max<std::size_t>(1, options.flush_every);
  for (std::size_t begin = 0; begin < misses.size(); begin += chunk) {
    const std::size_t end = std::min(misses.size(), begin + chunk);
    std::vector<std::string> batch;
    for (std::size_t m = begin; m < end; ++m) batch.push_back(plan.inputs[misses[m]]);
    std::vector<std::string> fetched;
    try {
      fetched = remote.service->RewriteBatch(batch);
    } catch (const GatewayError &e) {
      throw e.WithContext("batch rewrite of inputs " + std::to_string(begin) +
                          ".." + std::to_string(end - 1));
    }
    for (std::size_t m = begin; m < end; ++m) {
      outputs[misses[m]] = std::move(fetched[m - begin]);
      if (cache != nullptr) cache->Append(plan.inputs[misses[m]], outputs[misses[m]]);
    }
  }

  std::vector<Record> out(corpus.begin(), corpus.end());
  for (const Slot &slot : plan.slots) {
    out[slot.record].turns[slot.turn].text = outputs[slot.input];
  }
  if (stats != nullptr) *stats = plan.stats;
  return out;
}

template <typename Record>
std::vector<Record> BatchRewriteImpl(std::span<const Record> corpus,
                                     const RewriterKind &kind,
                                     const BatchRewriteOptions &options,
                                     ResponseCache *cache, RewriteStats *stats) {
  if (const auto *remote = std::get_if<RemoteRewriter>(&kind)) {
    return RewriteRemote(corpus, *remote, options, cache, stats);
  }
  return RewriteLocal(corpus, kind, options, stats);
}

template <typename Record>
RewriteStats PlanImpl(std::span<const Record> corpus, const RewriterKind &kind,
                      const BatchRewriteOptions &options,
                      const ResponseCache *cache) {
  if (std::holds_alternative<RemoteRewriter>(kind)) {
    return MakePlan(corpus, options, cache).stats;
  }
  RewriteStats stats = MakePlan(corpus, options, nullptr).stats;
  stats.remote_items = 0;
  return stats;
}

}  // namespace

std::vector<Dialogue> BatchRewrite(std::span<const Dialogue> corpus,
                                   const RewriterKind &kind,
                                   const BatchRewriteOptions &options,
                                   ResponseCache *cache, RewriteStats *stats) {
  return BatchRewriteImpl(corpus, kind, options, cache, stats);
}

std::vector<DetectionExample> BatchRewrite(
    std::span<const DetectionExample> corpus, const RewriterKind &kind,
    const BatchRewriteOptions &options, ResponseCache *cache,
    RewriteStats *stats) {
  return BatchRewriteImpl(corpus, kind, options, cache, stats);
}

RewriteStats PlanBatchRewrite(std::span<const DetectionExample> corpus,
                              const RewriterKind &kind,
                              const BatchRewriteOptions &options,
                              const ResponseCache *cache) {
  return PlanImpl(corpus, kind, options, cache);
}

RewriteStats PlanBatchRewrite(std::span<const Dialogue> corpus,
                              const RewriterKind &kind,
                              const BatchRewriteOptions &options,
                              const ResponseCache *cache) {
  return PlanImpl(corpus, kind, options, cache);
}

}  // namespace contra
