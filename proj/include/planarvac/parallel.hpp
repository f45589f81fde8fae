#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace planarvac {

// Worker cap: hardware concurrency clamped by PLANAR_VACUUM_THREADS.
inline unsigned thread_cap() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("PLANAR_VACUUM_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < n) n = static_cast<unsigned>(v);
  }
  return n;
}

// Index-deterministic parallel map: each worker writes only slots it owns,
// so results are bit-identical regardless of thread count or timing.
inline void parallel_for(std::size_t n,
                         const std::function<void(std::size_t)>& body) {
  unsigned workers = thread_cap();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([=, &body] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace planarvac
