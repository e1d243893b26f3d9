#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace gnum {

/// Runs fn(0..n-1) across hardware threads. Callers keep determinism by
/// writing results into index-addressed slots.
inline void parallel_for(long long n, const std::function<void(long long)>& fn) {
  if (n <= 0) return;
  unsigned workers = std::thread::hardware_concurrency();
  if (workers < 2 || n < 4) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  auto drain = [&] {
    for (long long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(drain);
  drain();
  for (auto& th : pool) th.join();
}

} // namespace gnum
