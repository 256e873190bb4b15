#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace repgap {

/// Runs fn(i) for i in [0, n) over a small thread pool. Callers write results
/// by index and reduce serially afterwards, so outputs are independent of the
/// schedule (bit-reproducible).
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (n < 2 * workers || workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr err;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace repgap
