#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace eprb {

/// Worker count: EPRB_WORKERS if set to a positive integer, else the hardware
/// concurrency (at least 1).
inline unsigned worker_count() {
  if (const char* env = std::getenv("EPRB_WORKERS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, n) on a bounded pool. Each index writes only its
/// own result slot; the first exception thrown is rethrown after joining.
template <typename Result>
std::vector<Result> parallel_map(std::size_t n, const std::function<Result(std::size_t)>& fn,
                                 unsigned workers = worker_count()) {
  std::vector<Result> results(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  const unsigned pool = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (pool <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (unsigned t = 0; t < pool; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace eprb
