#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace tamari {

/// Runs `check(i)` for i in [0, count) across worker threads and returns the
/// failure reported for the smallest failing i, so the outcome does not
/// depend on scheduling. `check` must be safe to call concurrently.
template <class Failure, class Check>
std::optional<std::pair<std::size_t, Failure>> first_failure(std::size_t count, Check check,
                                                             unsigned workers = 0) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{none};
  std::optional<std::pair<std::size_t, Failure>> result;
  std::mutex guard;

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      std::optional<Failure> failure = check(i);
      if (!failure) continue;
      std::lock_guard lock(guard);
      if (!result || i < result->first) {
        result.emplace(i, std::move(*failure));
        best.store(i);
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return result;
}

}  // namespace tamari
