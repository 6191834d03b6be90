#pragma once

#include <cstddef>
#include <functional>

namespace semico {

/// Worker count: the value set by set_thread_count, else SEMICO_THREADS,
/// else the hardware concurrency. Always at least 1.
unsigned thread_count();
/// 0 restores the default.
void set_thread_count(unsigned n);

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// body(chunk, begin, end) on each. Chunk boundaries depend only on n and
/// the chunk count, so callers merging per-chunk results in chunk order get
/// the same answer for every thread count.
void parallel_chunks(std::size_t n, std::size_t chunks,
                     const std::function<void(std::size_t chunk, std::size_t begin, std::size_t end)>& body);

}  // namespace semico
