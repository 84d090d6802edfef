#include "fatpoint/batch.hpp"

#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fatpoint {

int batch_hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void run_batch(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
  std::exception_ptr first;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
#else
  for (std::size_t i = 0; i < count; ++i) fn(i);
#endif
}

} // namespace fatpoint
