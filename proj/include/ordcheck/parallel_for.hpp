#pragma once

#include <cstddef>
#include <functional>

namespace ordcheck {

// Worker count: hardware concurrency capped by the ORDCHECK_THREADS
// environment variable (at least 1).
[[nodiscard]] std::size_t max_threads();

// Runs body(0..count-1) across max_threads() workers. Iterations must be
// independent; the first exception, if any, is rethrown after all workers
// join. Results are deterministic regardless of thread count because callers
// index output slots by iteration.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace ordcheck
