#pragma once

#include <cstddef>
#include <functional>

namespace fock {

/// Upper bound on worker threads used by parallel loops. Defaults to the
/// hardware concurrency; 1 runs everything on the calling thread.
void set_max_threads(int n);
int max_threads();

/// Runs body(i) for i in [0, n). Each index is visited exactly once and the
/// body must only write to state owned by that index, so results do not
/// depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fock
