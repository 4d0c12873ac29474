#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace goeritz {

// Runs fn(i) for i in [0, n).  Iterations must be independent; callers get
// determinism by writing to slot i and folding results in index order
// afterwards, so the parallel and serial paths produce identical reports.
template <typename Fn>
void parallel_for(std::ptrdiff_t n, bool parallel, Fn&& fn) {
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
    return;
#endif
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
}

inline int worker_count(bool parallel) {
#ifdef _OPENMP
  if (parallel) return omp_get_max_threads();
#endif
  (void)parallel;
  return 1;
}

}  // namespace goeritz
