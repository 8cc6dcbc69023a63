#pragma once

#include <functional>

namespace gve {

// Number of worker threads to use. Defaults to the hardware concurrency,
// capped by the GEK_THREADS environment variable when set.
int worker_count();

// Runs fn(chunk_index, begin, end) over [0, total) split into chunk_count
// contiguous chunks. Chunk boundaries depend only on (total, chunk_count),
// never on the thread count, so per-chunk partial results reduced in chunk
// order are bitwise reproducible on any machine load.
void parallel_chunks(int total, int chunk_count,
                     const std::function<void(int, int, int)>& fn);

// Convenience: one logical task per index, chunked internally.
void parallel_for(int total, const std::function<void(int)>& fn);

}  // namespace gve
