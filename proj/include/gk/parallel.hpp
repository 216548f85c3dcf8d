#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace gk {

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(chunk) for chunk = 0..n_chunks-1 on up to `threads` workers.
// Work is claimed by atomic counter; fn must write results into per-chunk
// slots so the final reduction order is independent of scheduling.
inline void parallel_chunks(std::int64_t n_chunks, int threads,
                            const std::function<void(std::int64_t)>& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || n_chunks <= 1) {
    for (std::int64_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  const int nw = static_cast<int>(std::min<std::int64_t>(threads, n_chunks));
  pool.reserve(nw);
  for (int w = 0; w < nw; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::int64_t c = next.fetch_add(1);
        if (c >= n_chunks) break;
        fn(c);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace gk
