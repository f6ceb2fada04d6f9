#pragma once

#include <cstddef>
#include <functional>

namespace plurikit {

/// Worker cap from PLURIKIT_THREADS (0 or unset means serial).
int worker_count();

/// Runs f(0..n-1), possibly concurrently, honoring worker_count(). Jobs must
/// be pure with respect to each other; results are indexed, so output order
/// never depends on scheduling.
void parallel_for_ordered(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace plurikit
