#ifndef FATPOINT_BATCH_HPP
#define FATPOINT_BATCH_HPP

#include <cstddef>
#include <exception>
#include <functional>

namespace fatpoint {

/// Runs fn(0..count-1) over independent work items. jobs <= 1 is the serial
/// reference path; otherwise OpenMP threads when available. Results must be
/// written into preallocated slots so ordering stays deterministic. The
/// first exception, if any, is rethrown after the loop.
void run_batch(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

/// Number of hardware threads the parallel path would use.
int batch_hardware_jobs();

} // namespace fatpoint

#endif
