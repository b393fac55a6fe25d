// Copyright 2026 The edacsc Authors.
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

#ifndef EDACSC_PARALLEL_H_
#define EDACSC_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace edacsc {

inline unsigned DefaultThreadCount() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Applies `fn` to every element using up to `threads` workers over
// contiguous slices. Output order matches input order, so results do not
// depend on the thread count. The first exception (by slice) is rethrown.
template <typename In, typename Fn>
auto ParallelMap(const std::vector<In>& in, Fn fn, unsigned threads)
    -> std::vector<std::invoke_result_t<Fn&, const In&>> {
  using Out = std::invoke_result_t<Fn&, const In&>;
  std::vector<Out> out(in.size());
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, threads), in.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t per = (in.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = w * per;
      const std::size_t end = std::min(in.size(), begin + per);
      try {
        for (std::size_t i = begin; i < end; ++i) out[i] = fn(in[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace edacsc

#endif  // EDACSC_PARALLEL_H_
