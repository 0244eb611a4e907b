#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace abundancy {

/// Evaluates fn(0), ..., fn(count - 1) on up to `jobs` threads and returns the
/// results in index order, so output never depends on the worker count.
/// The first exception thrown by any task is rethrown on the caller.
template <typename Fn>
auto ordered_map(std::size_t count, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

/// Splits [lo, hi] into consecutive chunks of at most `chunk` values.
struct Range {
  std::uint64_t lo;
  std::uint64_t hi;
};

inline std::vector<Range> split_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t chunk) {
  std::vector<Range> out;
  if (hi < lo) return out;
  chunk = std::max<std::uint64_t>(chunk, 1);
  for (std::uint64_t a = lo;; a += chunk) {
    const std::uint64_t b = (hi - a < chunk - 1) ? hi : a + chunk - 1;
    out.push_back({a, b});
    if (b == hi) break;
  }
  return out;
}

}  // namespace abundancy
