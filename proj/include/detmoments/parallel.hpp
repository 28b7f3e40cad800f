// Copyright 2026 The detmoments Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace detmoments {

/// Worker cap for library loops; 0 selects the hardware concurrency.
void setThreadCount(unsigned count);
unsigned threadCount();

/// Runs body(i) for i in [begin, end) over contiguous chunks, one per worker.
/// Each index is visited exactly once, so results written by index are deterministic.
void parallelFor(std::size_t begin, std::size_t end, const std::function<void(std::size_t)> &body);

/// Same partition, handing each worker its whole [lo, hi) range.
void parallelChunks(std::size_t begin, std::size_t end,
                    const std::function<void(std::size_t, std::size_t)> &body);

} // namespace detmoments
