#pragma once

#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsv::scan {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

enum class Mode { serial, parallel };

// Process-wide execution mode. Defaults to parallel when compiled with OpenMP
// and GSV_PARALLEL is not set to 0. Tests flip it to compare both paths.
Mode& mode();
bool parallel_enabled();

// Serial reference kernel: smallest i in [0,n) with !ok(i), npos when none.
template <class Ok>
std::size_t first_fail_serial(std::size_t n, Ok&& ok) {
  for (std::size_t i = 0; i < n; ++i)
    if (!ok(i)) return i;
  return npos;
}

// OpenMP kernel. schedule(static) hands each thread one contiguous block, so
// the per-thread first failure plus a global min reproduces the serial answer.
template <class Ok>
std::size_t first_fail_parallel(std::size_t n, Ok&& ok) {
#ifdef _OPENMP
  const long long nn = static_cast<long long>(n);
  long long bad = -1;
#pragma omp parallel
  {
    long long local = -1;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < nn; ++i) {
      if (local < 0 && !ok(static_cast<std::size_t>(i))) local = i;
    }
#pragma omp critical
    {
      if (local >= 0 && (bad < 0 || local < bad)) bad = local;
    }
  }
  return bad < 0 ? npos : static_cast<std::size_t>(bad);
#else
  return first_fail_serial(n, std::forward<Ok>(ok));
#endif
}

template <class Ok>
std::size_t first_fail(std::size_t n, Ok&& ok) {
  return parallel_enabled() ? first_fail_parallel(n, ok) : first_fail_serial(n, ok);
}

// Independent table fill; entries must not alias.
template <class T, class Fn>
void fill_table(std::size_t n, T* out, Fn&& fn) {
#ifdef _OPENMP
  if (parallel_enabled()) {
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < nn; ++i) out[i] = fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
}

}  // namespace gsv::scan
