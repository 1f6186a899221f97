#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace pslab {

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(block, begin, end) over [0,n) split into fixed-size blocks.
// Block boundaries depend only on n and block_size, never on the thread
// count, so per-block partial results can be combined in block order to get
// schedule-independent answers.
template <class Fn>
void parallel_blocks(std::size_t n, std::size_t block_size, unsigned threads, Fn&& fn) {
  if (n == 0) return;
  const std::size_t nblocks = (n + block_size - 1) / block_size;
  const unsigned use = std::min<std::size_t>(resolve_threads(threads), nblocks);
  if (use <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b) {
      fn(b, b * block_size, std::min(n, (b + 1) * block_size));
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      fn(b, b * block_size, std::min(n, (b + 1) * block_size));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(use);
  for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

inline std::size_t block_count(std::size_t n, std::size_t block_size) {
  return n == 0 ? 0 : (n + block_size - 1) / block_size;
}

}  // namespace pslab
