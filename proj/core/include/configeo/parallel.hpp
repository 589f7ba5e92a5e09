#pragma once

#include <cstddef>
#include <functional>

namespace configeo {

/// Worker cap used by every parallel loop in the library. 0 means
/// std::thread::hardware_concurrency().
void set_thread_count(unsigned threads);
unsigned thread_count();

/// Runs body(begin, end) over a partition of [0, n) into
/// contiguous chunks. Chunks are handed out dynamically; callers that need
/// deterministic reductions must key partial results by chunk, not worker.
void parallel_chunks(std::size_t n, std::size_t chunk,
                     const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace configeo
