#pragma once

#include <cstddef>
#include <functional>

namespace tbl {

// Worker count: min(hardware_concurrency, TBL_THREADS if set). Always >= 1.
int worker_count();

// Runs fn(i) for i in [0, count). Work items must be independent; callers
// keep determinism by writing into index-addressed slots and reducing
// sequentially afterwards.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace tbl
