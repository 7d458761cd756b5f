#pragma once

// Deterministic work partitioning. Results must never depend on the worker
// count, so loops are split into chunks whose boundaries depend only on the
// problem size, and partial results are combined in chunk order by callers.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ppclab {

// Process-wide worker cap. 0 means "use hardware concurrency".
inline int& thread_limit() {
  static int limit = 0;
  return limit;
}

inline int effective_threads() {
  int cap = thread_limit();
  if (cap > 0) return cap;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(chunk_index, begin, end) for every chunk of [0, n). Bodies must not
// throw. Chunks are handed to workers dynamically, but the (index, range)
// decomposition itself is fixed, so chunk-indexed output slots make any
// reduction independent of scheduling.
template <class Fn>
void parallel_chunks(std::size_t n, std::size_t chunk_size, Fn&& fn) {
  if (n == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
  const int workers =
      static_cast<int>(std::min<std::size_t>(effective_threads(), n_chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c)
      fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= n_chunks) return;
      fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
}

}  // namespace ppclab
