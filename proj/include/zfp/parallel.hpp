#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace zfp {

// Runs task(i) for i in [0, n_tasks). Worker w owns tasks w, w + W, w + 2W, ...
// so results written per task index never depend on scheduling.
inline void parallel_for(std::size_t n_tasks, unsigned workers, const std::function<void(std::size_t)>& task) {
  if (workers <= 1 || n_tasks <= 1) {
    for (std::size_t i = 0; i < n_tasks; ++i) task(i);
    return;
  }
  const std::size_t w_count = std::min<std::size_t>(workers, n_tasks);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(w_count);
    for (std::size_t w = 0; w < w_count; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n_tasks; i += w_count) task(i);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace zfp
