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

#ifndef CONTRA_COMMON_PARALLEL_H_
#define CONTRA_COMMON_PARALLEL_H_

#include <cstddef>
#include <vector>

#include "contra/common/execution.h"

namespace contra {

// out[i] = fn(i) for i in [0, n). The kParallel branch is an OpenMP loop; fn
// must be thread-safe and must not throw. Callers reduce `out` in index order,
// which keeps serial and parallel results bit-identical.
template <typename T, typename Fn>
std::vector<T> MapItems(std::size_t n, Execution exec, Fn &&fn) {
  std::vector<T> out(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = fn(i);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = fn(i);
  }
  return out;
}

}  // namespace contra

#endif  // CONTRA_COMMON_PARALLEL_H_
