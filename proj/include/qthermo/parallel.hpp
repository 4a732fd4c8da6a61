// Copyright 2026 The qthermo Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qthermo {

struct ExecutionOptions {
  unsigned threads = 1;  // 0 means std::thread::hardware_concurrency()
};

/// Runs fn(i) for i in [0, count) split into contiguous blocks over worker
/// threads. fn must only write to state owned by index i. The first
/// exception thrown by any worker is rethrown on the caller's thread.
template <typename Fn>
void parallel_for(std::int64_t count, ExecutionOptions opts, Fn&& fn) {
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  if (count <= 0) return;
  if (threads <= 1 || count == 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, count));

  std::exception_ptr first_error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::int64_t block = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::int64_t begin = t * block;
      const std::int64_t end = std::min(count, begin + block);
      if (begin >= end) break;
      workers.emplace_back([&, begin, end] {
        try {
          for (std::int64_t i = begin; i < end; ++i) fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qthermo
