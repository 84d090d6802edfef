#ifndef FATPOINT_ERRORS_HPP
#define FATPOINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fatpoint {

enum class errc {
  mixed_fields,
  division_by_zero,
  not_a_unit,
  not_monic,
  shape_mismatch,
  precision_request,
  precision_exhausted,
  excluded_value,
  validation_failure,
  schedule_violation,
  all_ones,
  iteration_cap_exceeded,
  no_relation,
  unsupported,
  not_relative,
  parse_error,
};

const char* errc_name(errc c);

/// Process exit code class for the CLI: 2 parse/validation, 3 violated
/// mathematical precondition, 4 precision/iteration exhaustion.
int errc_exit_code(errc c);

class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

  errc code() const { return code_; }

private:
  errc code_;
};

} // namespace fatpoint

#endif
