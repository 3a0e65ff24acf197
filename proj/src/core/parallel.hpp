#pragma once

// Minimal index-parallel loop. Worker count comes from SU3MULT_THREADS when
// set (0 or 1 disables threading), otherwise hardware concurrency.

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace su3 {

inline unsigned thread_budget() {
  if (const char* env = std::getenv("SU3MULT_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Calls fn(begin, end) over a partition of [0, n); fn must be thread-safe.
inline void parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
  unsigned workers = thread_budget();
  if (workers <= 1 || n < 2) {
    fn(0, n);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([=, &fn] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace su3
