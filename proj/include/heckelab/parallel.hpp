#pragma once

#include <cstddef>
#include <functional>

namespace heckelab {

// Worker count: HECKELAB_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n); indices are split into contiguous blocks.
// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace heckelab
