#pragma once

#include <cstddef>
#include <functional>

namespace bordersub {

/// Worker count: BORDERSUB_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(i) for every i in [0, count) on up to worker_count() threads.
/// body must only write to slots owned by its own index; results are
/// therefore independent of scheduling. The first exception thrown by any
/// call is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace bordersub
