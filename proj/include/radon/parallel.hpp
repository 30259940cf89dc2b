#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace radon {

// Global cap on worker threads (0 = hardware concurrency). The CLI sets
// this once from --threads; library code only reads it.
inline std::atomic<unsigned>& thread_cap() {
  static std::atomic<unsigned> cap{0};
  return cap;
}

inline void set_max_threads(unsigned n) { thread_cap().store(n); }

// explicit caps are honored as given; 0 falls back to the hardware count
inline unsigned max_threads() {
  unsigned cap = thread_cap().load();
  if (cap != 0) return cap;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, n). Each index must write only its own slot;
// results are then independent of the thread count and schedule.
template <class Body>
void parallel_for(std::int64_t n, const Body& body) {
  if (n <= 0) return;
  unsigned nthreads = max_threads();
  if (nthreads <= 1 || n == 1) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  nthreads = static_cast<unsigned>(
      std::min<std::int64_t>(nthreads, n));
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        std::int64_t i = next.fetch_add(1);
        if (i >= n) return;
        body(i);
      }
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace radon
