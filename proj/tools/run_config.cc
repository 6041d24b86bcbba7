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

#include "run_config.h"

#include <charconv>
#include <map>

#include "contra/common/error.h"
#include "contra/detection/scorer.h"

namespace contra::cli {

namespace {

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  const char *end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("config key '" + std::string(key) + "': cannot parse '" +
                     std::string(value) + "'");
  }
  return out;
}

std::string ShortestDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, ptr) : std::to_string(v);
}

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void RunConfig::Validate() const {
  if (!(eta > 0.0 && eta < 1.0)) throw UsageError("eta must lie in (0, 1)");
  if (!ParseMode(mode)) throw UsageError("unknown mode '" + mode + "'");
  if (!ParseScorerKind(scorer)) {
    throw UsageError("unknown scorer '" + scorer + "'");
  }
  if (rewriter != "identity" && rewriter != "rules" && rewriter != "remote") {
    throw UsageError("unknown rewriter '" + rewriter + "'");
  }
  if (rewriter == "rules" && rules.empty()) {
    throw UsageError("rewriter=rules needs a rule table (--rules)");
  }
  if (parallelism < 1) throw UsageError("parallelism must be >= 1");
  try {
    endpoint.Validate();
  } catch (const InvalidArgument &e) {
    throw UsageError(e.what());
  }
}

DetectionMode RunConfig::detection_mode() const {
  if (auto m = ParseMode(mode)) return *m;
  throw UsageError("unknown mode '" + mode + "'");
}

void SetConfigValue(RunConfig *c, std::string_view key,
                    std::string_view value) {
  if (key == "eta") {
    c->eta = ParseNumber<double>(key, value);
  } else if (key == "mode") {
    c->mode = value;
  } else if (key == "scorer") {
    c->scorer = value;
  } else if (key == "rewriter") {
    c->rewriter = value;
  } else if (key == "rules") {
    c->rules = value;
  } else if (key == "max_context") {
    c->max_context = ParseNumber<std::size_t>(key, value);
  } else if (key == "seed") {
    c->seed = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "cache") {
    c->cache = value;
  } else if (key == "parallelism") {
    c->parallelism = ParseNumber<int>(key, value);
    c->endpoint.parallelism = c->parallelism;
  } else if (key == "endpoint") {
    c->endpoint.base_url = value;
  } else if (key == "timeout") {
    c->endpoint.timeout_s = ParseNumber<double>(key, value);
  } else if (key == "max_retries") {
    c->endpoint.max_retries = ParseNumber<int>(key, value);
  } else if (key == "backoff_base") {
    c->endpoint.backoff_base_s = ParseNumber<double>(key, value);
  } else if (key == "batch_size") {
    c->endpoint.batch_size = ParseNumber<std::size_t>(key, value);
  } else {
    throw UsageError("unknown config key '" + std::string(key) + "'");
  }
}

void ApplyConfigText(RunConfig *config, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(line_no) +
                       ": expected key=value");
    }
    try {
      SetConfigValue(config, Trim(line.substr(0, eq)),
                     Trim(line.substr(eq + 1)));
    } catch (const UsageError &e) {
      throw UsageError("config line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
}

std::string PrintConfig(const RunConfig &c) {
  std::map<std::string, std::string> kv = {
      {"eta", ShortestDouble(c.eta)},
      {"mode", c.mode},
      {"scorer", c.scorer},
      {"rewriter", c.rewriter},
      {"rules", c.rules},
      {"max_context", std::to_string(c.max_context)},
      {"seed", std::to_string(c.seed)},
      {"cache", c.cache},
      {"parallelism", std::to_string(c.parallelism)},
      {"endpoint", c.endpoint.base_url},
      {"timeout", ShortestDouble(c.endpoint.timeout_s)},
      {"max_retries", std::to_string(c.endpoint.max_retries)},
      {"backoff_base", ShortestDouble(c.endpoint.backoff_base_s)},
      {"batch_size", std::to_string(c.endpoint.batch_size)},
  };
  std::string out;
  for (const auto &[k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

}  // namespace contra::cli
