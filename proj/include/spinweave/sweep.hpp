#pragma once

// Fan-out of independent sweep points over a small worker pool. Results come
// back in index order, so output never depends on the worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace spinweave {

/// Worker cap: SPINWEAVE_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
inline std::size_t worker_count() {
  if (const char* env = std::getenv("SPINWEAVE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Seed for sweep point `index`, so serial and parallel runs agree.
inline std::uint64_t child_seed(std::uint64_t seed, std::size_t index) {
  return seed ^ static_cast<std::uint64_t>(index);
}

/// Evaluates f(0) .. f(n-1) and returns the results in index order. The first
/// exception thrown by any point is rethrown after all workers stop.
template <class F>
auto parallel_map(std::size_t n, F&& f, std::size_t workers = worker_count())
    -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(n);
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace spinweave
