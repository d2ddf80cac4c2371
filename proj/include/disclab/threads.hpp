#pragma once

#include <cstddef>
#include <functional>

namespace disclab {

/// Worker cap: DISCLAB_THREADS when set (min 1), otherwise hardware threads.
std::size_t thread_budget();

/// Runs fn(0..njobs-1), possibly on several threads. Jobs must be
/// independent; any exception is rethrown on the caller after the join.
void run_jobs(std::size_t njobs, const std::function<void(std::size_t)>& fn);

}  // namespace disclab
