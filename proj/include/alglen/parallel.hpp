#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace alglen {

/// Worker-thread budget: ALGLEN_THREADS if set, else machine parallelism.
inline int worker_count() {
  if (const char* s = std::getenv("ALGLEN_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v < 256 ? v : 256;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

/// Runs fn(task) for every task in [0, tasks) on up to `threads` workers.
/// Tasks are claimed through an atomic cursor; callers keep results in
/// per-task slots and merge them in task order, which makes the outcome
/// independent of scheduling.
template <class Fn>
void parallel_tasks(std::int64_t tasks, int threads, Fn&& fn) {
  if (tasks <= 0) return;
  if (threads <= 1 || tasks == 1) {
    for (std::int64_t t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::atomic<std::int64_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      std::int64_t t = cursor.fetch_add(1);
      if (t >= tasks) return;
      try {
        fn(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  int n = threads < tasks ? threads : static_cast<int>(tasks);
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (int i = 0; i < n; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace alglen
