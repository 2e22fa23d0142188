// Copyright 2026 The Lexie Authors.
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

#ifndef LEXIE_PARALLEL_H_
#define LEXIE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace lexie {

// Runs fn(0..n-1) on up to `jobs` threads. Callers write results into
// per-index slots, so output order never depends on scheduling. The first
// exception thrown by fn is rethrown after all workers finish.
void ParallelFor(size_t n, int jobs, const std::function<void(size_t)> &fn);

}  // namespace lexie

#endif  // LEXIE_PARALLEL_H_
