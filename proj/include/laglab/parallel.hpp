#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace laglab {

inline int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Calls body(k) for k in [0, count) on up to `workers` threads. Results must
/// be written to per-index slots so the outcome does not depend on
/// scheduling. The first exception thrown by any call is rethrown.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  const auto threads = static_cast<std::size_t>(std::clamp(workers, 1, 256));
  if (threads == 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        body(k);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(threads, count); ++w) pool.emplace_back(run);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace laglab
