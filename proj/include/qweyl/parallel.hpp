#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qweyl {

/// Runs f(i) for i in [0, count). Iterations must be independent; results
/// should be written to preallocated slots so the output does not depend on
/// scheduling order.
template <class F>
void parallel_for(std::size_t count, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(count); ++i) f(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < count; ++i) f(i);
#endif
}

template <class F>
void serial_for(std::size_t count, F&& f) {
  for (std::size_t i = 0; i < count; ++i) f(i);
}

}  // namespace qweyl
