#pragma once

#include <cstddef>
#include <functional>

namespace curvelab {

/// Hardware concurrency, capped by CURVELAB_THREADS when set to a positive
/// integer.
unsigned worker_count();

/// Runs body(0..n-1) across worker threads. Each index runs exactly once;
/// results must be written to per-index slots. The first exception thrown by
/// any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace curvelab
