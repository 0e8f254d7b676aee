#pragma once

#include <cstddef>
#include <functional>

namespace hk {

/// Name of the environment variable that seeds the default worker count.
inline constexpr const char* kThreadsEnvVar = "HKASYM_THREADS";

/// Number of worker threads used by the engine loops. Defaults to the value
/// of HKASYM_THREADS, or 1 when unset.
unsigned thread_count();
void set_thread_count(unsigned threads);

/// Runs body(chunk, begin, end) over [0, count) split into contiguous chunks,
/// one chunk per worker. Chunk boundaries depend only on count and the
/// thread count, so callers that merge per-chunk results in chunk order get
/// the same answer for any scheduling.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t chunk, std::size_t begin, std::size_t end)>& body);

/// Number of chunks parallel_chunks will use for count items.
std::size_t chunk_count(std::size_t count);

}  // namespace hk
