#pragma once

#include <cstddef>
#include <functional>

namespace hilbert_et {

/// Worker count: HILBERT_ET_THREADS if set to a positive integer, otherwise
/// the hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Indices are
/// dealt out in contiguous blocks; the first exception thrown is rethrown
/// after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hilbert_et
