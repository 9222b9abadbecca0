#pragma once

#include <atomic>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace critpoint::detail {

// Runs fn(i) for i in [0, count). Work is claimed dynamically but results must
// be written by index on the caller side, so output is schedule independent.
// max_workers = 0 uses hardware concurrency. Exceptions propagate.
template <class Fn>
void parallel_for(std::size_t count, unsigned max_workers, Fn&& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned workers = max_workers == 0 ? hw : (max_workers < hw ? max_workers : hw);
  if (workers > count) workers = static_cast<unsigned>(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    }));
  }
  for (auto& f : futures) f.get();
}

}  // namespace critpoint::detail
