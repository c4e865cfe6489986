#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace zg {

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  constexpr std::size_t kMinPerThread = 2048;
  const std::size_t workers =
      std::min<std::size_t>(thread_count(), (n + kMinPerThread - 1) / kMinPerThread);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t block = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * block;
    const std::size_t hi = std::min(n, lo + block);
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = f(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace zg
