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

#ifndef CONTRA_REWRITING_BATCH_REWRITE_H_
#define CONTRA_REWRITING_BATCH_REWRITE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "contra/core/types.h"
#include "contra/gateway/response_cache.h"
#include "contra/rewriting/rewriter.h"

namespace contra {

struct BatchRewriteOptions {
  std::size_t max_context = kDefaultMaxContext;
  // Remote misses are sent in chunks of this many inputs; the cache is
  // appended after every chunk, so an aborted run keeps what it fetched.
  std::size_t flush_every = 64;
};

struct RewriteStats {
  std::size_t bot_turns = 0;
  std::size_t unique_inputs = 0;
  std::size_t cache_hits = 0;    // unique inputs answered by the cache
  std::size_t remote_items = 0;  // unique inputs sent to the service
};

// Corpus-level RewriteDialogueBots. For the remote kind every distinct encoded
// input is requested at most once and results are cached by input digest;
// identity and rule tables are computed in place and never touch the cache.
std::vector<Dialogue> BatchRewrite(std::span<const Dialogue> corpus,
                                   const RewriterKind &kind,
                                   const BatchRewriteOptions &options,
                                   ResponseCache *cache,
                                   RewriteStats *stats = nullptr);
std::vector<DetectionExample> BatchRewrite(
    std::span<const DetectionExample> corpus, const RewriterKind &kind,
    const BatchRewriteOptions &options, ResponseCache *cache,
    RewriteStats *stats = nullptr);

// What BatchRewrite would do, without contacting any service.
RewriteStats PlanBatchRewrite(std::span<const DetectionExample> corpus,
                              const RewriterKind &kind,
                              const BatchRewriteOptions &options,
                              const ResponseCache *cache);
RewriteStats PlanBatchRewrite(std::span<const Dialogue> corpus,
                              const RewriterKind &kind,
                              const BatchRewriteOptions &options,
                              const ResponseCache *cache);

}  // namespace contra

#endif  // CONTRA_REWRITING_BATCH_REWRITE_H_
