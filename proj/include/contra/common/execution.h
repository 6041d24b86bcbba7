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

#ifndef CONTRA_COMMON_EXECUTION_H_
#define CONTRA_COMMON_EXECUTION_H_

namespace contra {

// Selects between the OpenMP kernel and the serial reference loop. Both paths
// compute per-item values independently and reduce them in input order, so
// their results are bit-identical.
enum class Execution { kSerial, kParallel };

// Sets the OpenMP thread count used by kParallel kernels. Values < 1 keep the
// runtime default.
void SetParallelism(int threads);

}  // namespace contra

#endif  // CONTRA_COMMON_EXECUTION_H_
