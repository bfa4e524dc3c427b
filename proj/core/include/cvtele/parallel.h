// Copyright 2026 The cvtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVTELE_PARALLEL_H
#define CVTELE_PARALLEL_H

#include <cstddef>
#include <functional>

namespace cvtele {

/// Worker count from the CVTELE_THREADS environment variable, falling back to
/// the hardware concurrency. Never returns 0.
unsigned default_thread_count();

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// body(begin, end) on each. Blocks until all workers finish. If any chunk
/// throws, the exception from the lowest-indexed failing chunk is rethrown.
void parallel_for_chunks(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t, std::size_t)> &body);

}  // namespace cvtele

#endif  // CVTELE_PARALLEL_H
