#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace weakdistill {

/// Runs fn(i) for i in [0, n) across n_threads workers in static stripes.
/// Callers store results by index, so the outcome is identical for any
/// thread count.
inline void parallel_for(int n, int n_threads,
                         const std::function<void(int)>& fn) {
  if (n_threads <= 1 || n < 2) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) {
    workers.emplace_back([=, &fn] {
      for (int i = t; i < n; i += n_threads) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

/// Thread count from WEAKDISTILL_THREADS, default 1.
inline int env_thread_count() {
  if (const char* v = std::getenv("WEAKDISTILL_THREADS")) {
    const int n = std::atoi(v);
    if (n > 0) return n;
  }
  return 1;
}

}  // namespace weakdistill
