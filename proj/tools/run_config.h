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

#ifndef CONTRA_TOOLS_RUN_CONFIG_H_
#define CONTRA_TOOLS_RUN_CONFIG_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "contra/detection/decision.h"
#include "contra/gateway/endpoint.h"
#include "contra/rewriting/rewriter.h"

namespace contra::cli {

// Bad flags or config values. Maps to exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything a subcommand needs besides its input files. Resolution order:
// built-in defaults, then the --config file, then explicit flags.
struct RunConfig {
  double eta = kDefaultEta;
  std::string mode = "sub";          // sub | sub-concat | unstructured
  std::string scorer = "mock";       // mock | overlap | remote
  std::string rewriter = "identity"; // identity | rules | remote
  std::string rules;                 // rule table path for rewriter=rules
  std::size_t max_context = kDefaultMaxContext;
  std::uint64_t seed = 0;
  std::string cache;                 // response cache path, empty for none
  int parallelism = 4;
  Endpoint endpoint;

  // Throws UsageError on inconsistent or out-of-range values.
  void Validate() const;
  DetectionMode detection_mode() const;
};

// Applies "key = value" assignment to `config`. Unknown keys and unparsable
// values throw UsageError.
void SetConfigValue(RunConfig *config, std::string_view key,
                    std::string_view value);

// Flat key=value text: one assignment per line, '#' starts a comment line,
// blank lines are ignored. Errors name the 1-based line.
void ApplyConfigText(RunConfig *config, std::string_view text);

// The fully resolved config in the same key=value format, keys sorted.
// ApplyConfigText(PrintConfig(c)) reproduces c.
std::string PrintConfig(const RunConfig &config);

}  // namespace contra::cli

#endif  // CONTRA_TOOLS_RUN_CONFIG_H_
