#pragma once

/// \file
/// Minimal data-parallel loop. The worker count comes from the
/// SPINOR_INV_THREADS environment variable, else the hardware concurrency.

#include <cstddef>
#include <functional>

namespace spinv {

/// At least 1. Invalid or nonpositive SPINOR_INV_THREADS values are ignored.
int thread_count();

/// Calls body(i) for i in [0, n). Each index runs exactly once; callers
/// write results into slot i so output order never depends on scheduling.
/// The first exception thrown by any body is rethrown after all workers
/// finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace spinv
