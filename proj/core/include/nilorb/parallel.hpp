#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace nilorb {

/// Worker count for inner sweeps, taken from NILORB_THREADS (default 1).
inline int thread_count() {
  if (const char* env = std::getenv("NILORB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

/// Runs fn(i) for i in [0, n). Results must be written into pre-sized slots
/// so the merge is deterministic regardless of scheduling.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int workers = thread_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t stripe = static_cast<std::size_t>(workers);
  for (std::size_t w = 0; w < stripe; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += stripe) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

} // namespace nilorb
