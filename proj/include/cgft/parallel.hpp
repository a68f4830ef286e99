#pragma once

#include <cstddef>
#include <functional>

namespace cgft {

/// Thread count for parallel loops: CGFT_THREADS if set, otherwise the
/// hardware concurrency, always at least one.
unsigned thread_count();

/// Runs fn(i) for i in [0, n) across worker threads. Results must be written
/// to disjoint slots; the partition is deterministic. Exceptions from workers
/// are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace cgft
