#pragma once

#include <cstddef>
#include <functional>

namespace repfact {

/// Number of worker threads to use. Reads REPFACT_THREADS once; values < 1
/// or unset fall back to the hardware concurrency.
std::size_t thread_budget();

/// Runs body(i) for i in [begin, end) on up to thread_budget() threads.
/// Iterations must be independent; any exception is rethrown on the caller.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

} // namespace repfact
