// parallel.hpp - deterministic data-parallel loops.

#pragma once

#include <cstddef>
#include <functional>

namespace vortex_twm
{

// VORTEX_TWM_THREADS, 0 or unset meaning hardware concurrency.
int default_thread_count();

// Calls body(i) for i in [0, count) split into contiguous blocks. Every index is
// written by exactly one worker, so results do not depend on the worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body,
                  int threads = 0);

} // namespace vortex_twm
