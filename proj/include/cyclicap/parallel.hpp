#pragma once

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace cyclicap {

// Execution policy for the batch kernels. Par runs the loop body under
// OpenMP when compiled in; every Par path is required to produce output
// identical to Seq, so Seq doubles as the reference implementation in tests.
enum class Exec { Seq, Par };

template <class F>
void parallel_for(Exec exec, int n, F&& body) {
#if defined(_OPENMP)
  if (exec == Exec::Par) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
#else
  (void)exec;
#endif
  for (int i = 0; i < n; ++i) {
    body(i);
  }
}

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace cyclicap
