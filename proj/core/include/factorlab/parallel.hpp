#pragma once

#include <cstddef>
#include <functional>

namespace factorlab {

/// Worker count from FACTORLAB_THREADS, else hardware concurrency (at least 1).
/// Malformed or non-positive values fall back to 1.
int thread_count();

/// Calls body(i) for every i in [0, count) on up to `threads` workers. Indices
/// are handed out dynamically; body must only touch slot i of shared output.
/// The first exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, int threads = thread_count());

}  // namespace factorlab
