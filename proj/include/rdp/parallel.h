// Copyright 2026 The RDP Histogram Authors
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

#ifndef RDP_PARALLEL_H_
#define RDP_PARALLEL_H_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace rdp {

// Evaluates fn(i) for i in [0, trials) on up to `threads` worker threads and
// returns the results indexed by trial. Each trial must draw from its own
// rng stream (RandomSource::Fork(i)); callers then reduce the vector in
// index order, which makes the aggregate independent of the thread count.
// The first exception thrown by any trial is rethrown here.
template <typename Fn>
auto RunTrials(int64_t trials, int threads, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, int64_t>> {
  using Result = std::invoke_result_t<Fn&, int64_t>;
  static_assert(!std::is_same_v<Result, bool>,
                "std::vector<bool> is not safe for concurrent writes");
  std::vector<Result> results(static_cast<size_t>(std::max<int64_t>(trials, 0)));
  if (trials <= 0) return results;
  const int64_t workers =
      std::clamp<int64_t>(threads, 1, std::min<int64_t>(trials, 256));
  if (workers == 1) {
    for (int64_t i = 0; i < trials; ++i) results[i] = fn(i);
    return results;
  }

  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int64_t i = w; i < trials; i += workers) results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace rdp

#endif  // RDP_PARALLEL_H_
