#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace tailbound {

/// Worker count: TAILBOUND_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs fn(0..count-1) on worker_count() threads and returns the results in
/// index order. The first exception thrown by any task is rethrown.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn);

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace tailbound
