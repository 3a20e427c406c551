#pragma once

#include <algorithm>
#include <thread>
#include <vector>

#include "signspectra/core.hpp"

namespace signspectra::detail {

// Runs body(i) for i in [0, count) over contiguous chunks. Each index is
// written by exactly one worker, so results do not depend on scheduling.
template <class Body>
void parallel_for(Index count, Index min_chunk, Body&& body) {
  const unsigned workers = worker_threads();
  const Index chunks = std::min<Index>(workers, (count + min_chunk - 1) / std::max<Index>(min_chunk, 1));
  if (chunks <= 1) {
    for (Index i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(chunks);
  const Index step = (count + chunks - 1) / chunks;
  for (Index c = 0; c < chunks; ++c) {
    const Index lo = c * step;
    const Index hi = std::min(count, lo + step);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (Index i = lo; i < hi; ++i) body(i);
    });
  }
}

}  // namespace signspectra::detail
