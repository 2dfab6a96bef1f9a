#pragma once

#include <cstddef>
#include <functional>

namespace flagdepth {

// Number of worker threads: hardware concurrency capped by the
// FLAGDEPTH_THREADS environment variable (>= 1).
int worker_count();

// Runs fn(i) for i in [0, count) across the workers. fn must be safe to
// call concurrently for distinct i; iteration order is unspecified.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace flagdepth
