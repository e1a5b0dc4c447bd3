#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hilbk3 {

// Applies fn to every index in [0, count) on up to jobs threads and returns
// the results in index order. fn must be safe to call concurrently.
template <class T, class Fn>
std::vector<T> parallel_map_ordered(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<T> results(count);
  if (count == 0) return results;
  if (jobs == 0) jobs = 1;
  jobs = std::min<unsigned>(jobs, (unsigned)count);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          results[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
          return;
        }
      }
    });
  }
  for (auto& th : workers) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

} // namespace hilbk3
