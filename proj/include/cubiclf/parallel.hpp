#pragma once

#include <cstddef>
#include <functional>

namespace cubiclf {

// Process-wide worker count (1 = serial). 0 requests hardware_concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs f(i) for i in [0, n) across the worker pool in contiguous static
// chunks. Each index writes only its own output slot, so results are
// identical for any thread count; callers then reduce in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace cubiclf
