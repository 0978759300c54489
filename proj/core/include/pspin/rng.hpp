#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace pspin {

using Engine = std::mt19937_64;

/// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the child stream `index` of the master seed. Streams are what
/// make Monte Carlo results independent of the number of worker threads:
/// work is cut into fixed blocks and block b always draws from stream b.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

inline Engine make_engine(std::uint64_t master, std::uint64_t index) {
  return Engine(stream_seed(master, index));
}

/// Worker count from $PSPIN_THREADS, else the hardware concurrency.
int default_thread_count();

/// Evaluates fn(b) for b in [0, n_blocks) on up to `threads` workers and
/// returns the results in block order. The first exception thrown by any
/// block is rethrown on the caller's thread.
template <class Fn>
auto run_blocks(std::size_t n_blocks, int threads, Fn&& fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(n_blocks);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(n_blocks, threads > 0 ? threads : 1));
  if (workers == 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) out[b] = fn(b);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t b = next++; b < n_blocks; b = next++) {
          try {
            out[b] = fn(b);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace pspin
