// Copyright 2026 The Snipmine Authors.
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

#ifndef SNIPMINE_PARALLEL_H_
#define SNIPMINE_PARALLEL_H_

#include <omp.h>

#include <cstddef>
#include <exception>
#include <vector>

namespace snipmine {

// Worker count to hand to OpenMP; values < 1 mean "runtime default".
inline int EffectiveThreads(int threads) {
  return threads >= 1 ? threads : omp_get_max_threads();
}

// Runs fn(i) for i in [0, n) on `threads` OpenMP workers. Exceptions are
// captured per index and the one with the lowest index is rethrown after the
// loop, so failures are reported identically for any worker count.
template <typename Fn>
void ParallelFor(std::size_t n, int threads, Fn&& fn) {
  if (n == 0) return;
  const int workers = EffectiveThreads(threads);
  std::vector<std::exception_ptr> errors(n);
  bool failed = false;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers) \
    reduction(|| : failed)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
      failed = true;
    }
  }
  if (!failed) return;
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace snipmine

#endif  // SNIPMINE_PARALLEL_H_
