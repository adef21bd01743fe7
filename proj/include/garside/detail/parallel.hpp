#pragma once

// Deterministic data-parallel loop: each index writes only its own slot, so
// results do not depend on the thread count or the schedule.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace garside::detail {

/// Worker count: set_thread_count() wins, then GARSIDE_THREADS, then 1.
inline int& thread_count_override() {
  static int value = 0;
  return value;
}

inline void set_thread_count(int n) { thread_count_override() = std::max(1, n); }

inline int thread_count() {
  if (thread_count_override() > 0) return thread_count_override();
  if (const char* env = std::getenv("GARSIDE_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const auto workers = static_cast<std::size_t>(std::min<long>(thread_count(), static_cast<long>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace garside::detail
