#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ggt {

// Worker count from GGT_WORKERS (default 1). Results of all parallel scans
// are merged with order-independent reductions, so any count gives
// byte-identical output.
inline int worker_count() {
  const char* env = std::getenv("GGT_WORKERS");
  if (env == nullptr) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : std::min(n, 64);
}

// Runs fn(begin, end, worker_index) over a partition of [0, n).
template <class Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
  int workers = worker_count();
  if (workers <= 1 || n < 2048) {
    fn(std::size_t{0}, n, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::size_t chunk = (n + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
  for (int w = 0; w < workers; ++w) {
    std::size_t begin = static_cast<std::size_t>(w) * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace ggt
