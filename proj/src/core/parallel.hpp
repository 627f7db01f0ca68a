#pragma once

#include <cstddef>
#include <functional>

namespace iterlab {

// Worker cap: ITERLAB_THREADS if set, otherwise hardware concurrency.
int worker_count();

// Runs body(i) for i in [0,n). Work items write results by index, so the
// outcome is identical for any worker count; only scheduling varies.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace iterlab
