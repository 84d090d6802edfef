#ifndef FATPOINT_REDUCTION_HPP
#define FATPOINT_REDUCTION_HPP

#include <functional>
#include <utility>
#include <vector>

#include "fatpoint/cycles.hpp"
#include "fatpoint/milnor.hpp"

namespace fatpoint {

/// One machine-checkable reduction step. Q lives in y_1..y_n plus the
/// auxiliary variable y' (last index, nvars = n+1):
///     Q = Pbar_i(y_i) - (y_i - 1)^{d_i - 1} (y_i - chat) y'
/// Its y'=0 face is the before-relation P_i, its y'=infinity face carries
/// the after-relation y_i = chat once the excluded (y_i - 1)-factor drops.
struct ReductionCertificate {
  int index = 1;      // 1-based i
  int d = 1;          // deg_{y_i} of the before-relation
  MultiPoly chat;     // canonical lift of c^{(i)}, in y_1..y_{i-1} over nvars = n
  MultiPoly Q;        // over nvars = n+1
  TriangularCycle before;
  TriangularCycle after;
  long long e = 1;    // multiplicity factor
  std::size_t consumed = 0;
};

struct ReductionTrace {
  std::vector<ReductionCertificate> steps;
  std::vector<TruncatedSeries> coordinates; // final graph coordinates, full precision
  long long total_multiplicity = 1;
  std::size_t consumed = 0; // max precision spent in any linear solve
};

/// The scheduler rule: the largest index i with d_j = 1 for all j > i and
/// d_i > 1. AllOnes when there is nothing to reduce.
int schedule(const std::vector<int>& degree_vec);

/// Index sequence the scheduler emits along a run whose post-step degree
/// vectors are supplied by `next` (an injected oracle; called with the step
/// index just applied). Used to pin the scheduler against a known trace.
std::vector<int> schedule_trace(std::vector<int> degree_vec,
                                const std::function<std::vector<int>(int, const std::vector<int>&)>& next,
                                std::size_t cap);

/// One step of the reduction: replaces level i by y_i = chat, substitutes
/// chat into the higher relations, retriangulates and re-validates.
/// Requires d_j = 1 for j > i (ScheduleViolation otherwise).
ReductionCertificate reduce_step(const TriangularCycle& C, int index);

/// Full regulator: schedule/reduce until the degree vector is all ones, then
/// read the graph coordinates mod t^m. The iteration cap is 2^n * n + 16.
std::pair<MilnorSymbolSum, ReductionTrace> regulator(const TriangularCycle& C, std::size_t m);

/// Like regulator but with the step index chosen by `pick` from the set of
/// valid indices (for path-independence checks). `pick` may return an
/// identity index (d_i = 1) as long as the schedule precondition holds.
std::pair<MilnorSymbolSum, ReductionTrace> regulator_with_schedule(
    const TriangularCycle& C, std::size_t m,
    const std::function<int(const std::vector<int>&)>& pick);

/// Recomputes all four faces of Q within the tower and re-derives `after`
/// from scratch; true iff everything matches. Never throws on mismatch.
bool replay_certificate(const ReductionCertificate& cert, std::string* diagnostic = nullptr);

} // namespace fatpoint

#endif
