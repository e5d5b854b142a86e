#pragma once

#include <cstddef>
#include <functional>

namespace hforge {

// Worker count: HFORGE_THREADS when set (clamped to >= 1), else the
// hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, count) across workers. Callers keep determinism
// by writing results into index-addressed storage only; fn must not throw.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hforge
