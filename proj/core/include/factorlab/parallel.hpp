#pragma once
// Contiguous-chunk index parallelism. Each worker sees its own id so callers
// can keep per-worker state (engines, memo tables); results must be written
// to caller-owned per-index slots, which keeps output independent of the
// worker count.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace factorlab {

inline void parallel_for_indexed(std::size_t n, int workers,
                                 const std::function<void(int, std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(0, i);
    return;
  }
  std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(w);
  for (std::size_t wid = 0; wid < w; ++wid) {
    std::size_t begin = wid * n / w;
    std::size_t end = (wid + 1) * n / w;
    threads.emplace_back([&, wid, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(static_cast<int>(wid), i);
      } catch (...) {
        errors[wid] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace factorlab
