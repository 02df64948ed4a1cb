#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vgnet {

/// Runs run_task(0..n_tasks-1), each index exactly once, on up to `threads`
/// worker threads. Tasks must write only to their own output slot; with that
/// discipline results are identical for every thread count. The first
/// exception a task throws is rethrown here after all workers join.
template <class F>
void parallel_for_tasks(std::size_t n_tasks, int threads, F&& run_task) {
  if (threads <= 1 || n_tasks <= 1) {
    for (std::size_t i = 0; i < n_tasks; ++i) run_task(i);
    return;
  }
  const std::size_t n_workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n_tasks);
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr failure;
  const auto worker = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= n_tasks || failure) return;
        i = next++;
      }
      try {
        run_task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace vgnet
