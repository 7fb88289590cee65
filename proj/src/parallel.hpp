#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace witbench::detail {

// Worker count for `jobs` independent tasks: hardware concurrency by default,
// overridden by WITBENCH_THREADS (>= 1). Thread count never changes results;
// callers assign each job index its own output slot.
inline int worker_count(std::size_t jobs) {
  unsigned base = std::thread::hardware_concurrency();
  if (base == 0) base = 4;
  if (const char* env = std::getenv("WITBENCH_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) base = static_cast<unsigned>(v);
  }
  if (jobs < base) base = static_cast<unsigned>(jobs);
  return base == 0 ? 1 : static_cast<int>(base);
}

template <class Fn>
void parallel_for(std::size_t n, int max_workers, Fn&& fn) {
  if (n == 0) return;
  int workers = worker_count(n);
  if (max_workers > 0 && workers > max_workers) workers = max_workers;
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace witbench::detail
