#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace slicealg {

/// Thread cap: SLICE_CLIFFORD_THREADS when set, hardware concurrency
/// otherwise.
inline int thread_count() {
  if (const char* env = std::getenv("SLICE_CLIFFORD_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(i) for i in [0, n) across worker threads.  Work items must be
/// independent; callers assemble results by index so output stays
/// deterministic.
inline void parallel_for(long n, const std::function<void(long)>& fn) {
  const int workers = std::min<long>(thread_count(), n);
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace slicealg
