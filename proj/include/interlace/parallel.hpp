#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace interlace {

/// Worker count from the INTERLACE_WORKERS environment variable, falling
/// back to the hardware concurrency. Always at least 1.
int default_workers();

/// Evaluates fn(0..count-1) on up to `workers` threads and returns the
/// results in index order, independent of completion order. The first
/// exception thrown by any task is rethrown on the caller's thread.
template <class Fn>
auto parallel_map(std::size_t count, int workers, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<Result>> slots(count);
  const std::size_t threads = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(workers, 1)));

  if (threads <= 1) {
    for (std::size_t idx = 0; idx < count; ++idx) slots[idx].emplace(fn(idx));
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (std::size_t idx = next++; idx < count; idx = next++) {
            try {
              slots[idx].emplace(fn(idx));
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
              next = count;
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<Result> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace interlace
