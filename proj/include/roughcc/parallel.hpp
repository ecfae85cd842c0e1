#pragma once

// Minimal fork-join helpers.  ROUGHCC_THREADS caps the worker count; results
// are merged in a fixed order so parallel runs stay deterministic.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace roughcc {

inline int thread_count() {
  if (const char* env = std::getenv("ROUGHCC_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// f(begin, end) over a block partition of [0, n)
template <class F>
void parallel_blocks(std::size_t n, F&& f) {
  const int nt = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
  if (nt <= 1 || n < 2) {
    f(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    std::size_t b = t * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&f, b, e] { f(b, e); });
  }
  for (auto& th : pool) th.join();
}

// max over i of g(i); g returns double.  Per-block maxima merged in block
// order (max is order-insensitive anyway).
template <class G>
double parallel_max(std::size_t n, G&& g) {
  const int nt = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
  std::vector<double> local(std::max(nt, 1), 0.0);
  const std::size_t chunk = nt > 0 ? (n + nt - 1) / nt : n;
  parallel_blocks(n, [&](std::size_t b, std::size_t e) {
    double m = 0.0;
    for (std::size_t i = b; i < e; ++i) m = std::max(m, g(i));
    local[chunk == 0 ? 0 : b / chunk] = m;
  });
  double m = 0.0;
  for (double v : local) m = std::max(m, v);
  return m;
}

}  // namespace roughcc
