#include "fatpoint/errors.hpp"

namespace fatpoint {

const char* errc_name(errc c) {
  switch (c) {
  case errc::mixed_fields: return "MixedFields";
  case errc::division_by_zero: return "DivisionByZero";
  case errc::not_a_unit: return "NotAUnit";
  case errc::not_monic: return "NotMonic";
  case errc::shape_mismatch: return "ShapeMismatch";
  case errc::precision_request: return "PrecisionRequest";
  case errc::precision_exhausted: return "PrecisionExhausted";
  case errc::excluded_value: return "ExcludedValue";
  case errc::validation_failure: return "ValidationFailure";
  case errc::schedule_violation: return "ScheduleViolation";
  case errc::all_ones: return "AllOnes";
  case errc::iteration_cap_exceeded: return "IterationCapExceeded";
  case errc::no_relation: return "NoRelation";
  case errc::unsupported: return "Unsupported";
  case errc::not_relative: return "NotRelative";
  case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

int errc_exit_code(errc c) {
  switch (c) {
  case errc::parse_error:
  case errc::validation_failure:
    return 2;
  case errc::precision_exhausted:
  case errc::iteration_cap_exceeded:
    return 4;
  default:
    return 3;
  }
}

} // namespace fatpoint
