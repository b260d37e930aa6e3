#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace salmon {

// Process-wide worker count; 0 means "use hardware concurrency".
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs fn(i) for i in [0, n). Tasks write into caller-owned slots, so
// results are identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace salmon
