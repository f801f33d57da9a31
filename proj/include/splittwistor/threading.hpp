#pragma once

/**
 * @file threading.hpp
 * @brief Deterministic parallel loops.
 *
 * Parallel results must be bit-identical to serial ones.  parallel_for writes
 * each item's result into its own slot, so only scheduling differs between
 * thread counts; reductions always sum per-item (or fixed-size chunk) partial
 * results in index order on the calling thread.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace stw {

/// Process-wide default worker count (CLI --threads writes this).
inline int& default_thread_count() {
  static int n = static_cast<int>(std::thread::hardware_concurrency());
  return n;
}

/// Run fn(i) for i in [0, n).  fn must only touch state owned by item i.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, int threads = -1) {
  if (threads < 0) threads = default_thread_count();
  threads = std::max(1, threads);
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t nthreads = std::min<std::size_t>(threads, n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

/// Deterministic sum of fn(i) over [0, n): per-item values are accumulated in
/// fixed 1024-item chunks in index order, independent of the thread count.
template <typename Fn>
double parallel_sum(std::size_t n, Fn&& fn, int threads = -1) {
  constexpr std::size_t kChunk = 1024;
  const std::size_t nchunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(nchunks, 0.0);
  parallel_for(
      nchunks,
      [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += fn(i);
        partial[c] = s;
      },
      threads);
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace stw
