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

#include "detmoments/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace detmoments {

namespace {

std::atomic<unsigned> configured{0};

} // namespace

void setThreadCount(unsigned count) { configured = count; }

unsigned threadCount() {
    unsigned n = configured.load();
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
    }
    return n;
}

void parallelFor(std::size_t begin, std::size_t end, const std::function<void(std::size_t)> &body) {
    parallelChunks(begin, end, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            body(i);
        }
    });
}

void parallelChunks(std::size_t begin, std::size_t end,
                    const std::function<void(std::size_t, std::size_t)> &body) {
    if (end <= begin) {
        return;
    }
    std::size_t count = end - begin;
    std::size_t workers = std::min<std::size_t>(threadCount(), count);
    // Tiny ranges are not worth a thread.
    if (workers <= 1 || count < 64) {
        body(begin, end);
        return;
    }
    std::exception_ptr failure;
    std::mutex failureLock;
    std::vector<std::thread> pool;
    std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = begin + w * chunk;
        std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) {
            break;
        }
        pool.emplace_back([&, lo, hi] {
            try {
                body(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> guard(failureLock);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace detmoments
