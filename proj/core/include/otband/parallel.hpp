#pragma once

#include <cstddef>
#include <functional>

namespace otband {

/// Worker count actually used: `requested` if positive, otherwise hardware
/// concurrency; in both cases capped by the OTBAND_THREADS environment
/// variable when it is set to a positive integer.
std::size_t resolve_thread_count(int requested);

/// Runs fn(i) for i in [0, count) across workers. Tasks must be independent
/// and write only to their own slots; scheduling order is unspecified, so
/// determinism is the task's responsibility (index-keyed RNG streams).
/// Exceptions from tasks are collected and the first one is rethrown.
void parallel_for(std::size_t count, int requested_threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace otband
