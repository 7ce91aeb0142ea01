#pragma once

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace udisc::par {

// Every data-parallel kernel in the toolkit runs through for_indices with an
// explicit mode.  Serial is the reference implementation; Parallel must give
// bit-identical results because reductions are performed afterwards in index
// order by the caller.
enum class Mode { Serial, Parallel };

inline Mode default_mode() {
#ifdef _OPENMP
  return Mode::Parallel;
#else
  return Mode::Serial;
#endif
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// f(i) is invoked for i in [0, n).  Exceptions thrown by f are captured and
// rethrown on the calling thread (the first one wins).
template <class F>
void for_indices(std::size_t n, Mode mode, F&& f) {
  if (mode == Mode::Serial) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    if (err) continue;
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(udisc_par_err)
#endif
      {
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace udisc::par
