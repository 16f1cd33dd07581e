// Minimal data-parallel loop. Work is split into contiguous chunks whose
// results are written to disjoint slots, so outputs never depend on the
// number of threads.
#pragma once

#include "tukey/numeric.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace tukey {

/// Worker count from TUKEY_THREADS (default: hardware concurrency, min 1).
int thread_count();

/// Calls body(begin, end) over a partition of [0, count).
template <typename Body>
void parallel_for(Index count, Body&& body) {
  const Index workers = std::min<Index>(thread_count(), std::max<Index>(count / 64, 1));
  if (workers <= 1) {
    body(Index{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  const Index chunk = (count + workers - 1) / workers;
  for (Index w = 0; w < workers; ++w) {
    const Index begin = w * chunk;
    const Index end = std::min(count, begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      try {
        if (begin < end) body(begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace tukey
