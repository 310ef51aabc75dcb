#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sniff {

namespace detail {
inline std::atomic<unsigned>& thread_count_slot() {
  static std::atomic<unsigned> count{0};  // 0 = hardware concurrency
  return count;
}
}  // namespace detail

/// Process-wide worker count for the per-source loops (betweenness,
/// closeness, accessibility, expected force, trajectory classification).
/// Outputs are identical for every setting; this only affects wall time.
inline void set_thread_count(unsigned n) { detail::thread_count_slot() = n; }

inline unsigned thread_count() {
  unsigned n = detail::thread_count_slot();
  if (n == 0) n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Block handed to parallel_for workers. Fixed size, independent of the
/// worker count, so any reduction done per block is bit-stable across
/// thread settings.
inline constexpr std::size_t kParallelBlock = 16;

/// Runs fn(i) for every i in [0, n). fn must only touch state owned by i
/// (slot writes); cross-i accumulation belongs to the caller, done in index
/// order after this returns.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
  const unsigned workers = thread_count();
  if (n == 0) return;
  if (workers <= 1 || n <= kParallelBlock) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  const std::size_t blocks = (n + kParallelBlock - 1) / kParallelBlock;
  std::atomic<std::size_t> next_block{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    for (;;) {
      const std::size_t b = next_block.fetch_add(1);
      if (b >= blocks || failed.load()) return;
      const std::size_t lo = b * kParallelBlock;
      const std::size_t hi = std::min(n, lo + kParallelBlock);
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  const unsigned spawn = static_cast<unsigned>(
      std::min<std::size_t>(workers, blocks));
  pool.reserve(spawn);
  for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sniff
