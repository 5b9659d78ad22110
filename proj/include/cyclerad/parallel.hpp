#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "cyclerad/z2.hpp"

namespace cyclerad {

/// Runs fn(0) .. fn(n-1) on up to `threads` workers. Work items must be
/// independent; the first exception thrown by any item is rethrown.
template <class Fn>
void parallel_for(Index n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (Index i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<Index> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    const Index workers = std::min<Index>(threads, n);
    pool.reserve(workers);
    for (Index t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (Index i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace cyclerad
