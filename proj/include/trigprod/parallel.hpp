#pragma once

#include <cstddef>
#include <functional>

namespace trigprod {

// Maps requested <= 0 to the hardware thread count (at least 1).
int resolve_thread_count(int requested);

// Runs fn(chunk_index, begin, end) over [0, count) split into fixed-size
// chunks. Chunk boundaries depend only on count and chunk_size, never on the
// thread count, so per-chunk outputs indexed by chunk_index (and any merge
// that walks chunks in ascending index order) are bit-identical for every
// worker count.
void for_each_chunk(std::size_t count, std::size_t chunk_size, int threads,
                    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace trigprod
