#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace xt {

// Worker cap from XENOTREE_THREADS (0 or unset = auto).
inline int worker_cap() {
  const char* env = std::getenv("XENOTREE_THREADS");
  long v = env ? std::strtol(env, nullptr, 10) : 0;
  if (v <= 0) v = long(std::thread::hardware_concurrency());
  if (v <= 0) v = 1;
  return int(v);
}

// Index-parallel loop; f(i) must only touch slot i of shared state.
template <typename F>
void parallel_for(size_t count, F&& f) {
  int workers = worker_cap();
  if (workers <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) f(i);
    return;
  }
  if (size_t(workers) > count) workers = int(count);
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(size_t(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        f(i);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace xt
