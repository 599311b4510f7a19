#pragma once

#include <functional>

namespace presto {

/// Number of worker threads: explicit request > PRESTO_THREADS env var >
/// hardware concurrency.
int resolve_thread_count(int requested);

/// Runs fn(i) for i in [0, count) on a small thread pool. Each index is
/// claimed exactly once; callers that need deterministic results write into
/// per-index slots and reduce in index order afterwards.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace presto
