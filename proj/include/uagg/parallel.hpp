#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace uagg {

// Worker count: UAGG_WORKERS when set and >= 1, else hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("UAGG_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(0..n-1), each index exactly once, on a bounded pool. Callers
// keep determinism by writing results into index-addressed slots; the
// first exception is rethrown after all workers finish.
template <class F>
void parallel_for(int n, F&& fn, int workers = worker_count()) {
  if (n <= 0) return;
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (int i; (i = next.fetch_add(1)) < n;) {
      if (failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  const int k = std::min(workers, n);
  if (k <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(k - 1);
    for (int i = 0; i < k - 1; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace uagg
