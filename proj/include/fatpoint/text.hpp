#ifndef FATPOINT_TEXT_HPP
#define FATPOINT_TEXT_HPP

#include <string>

#include "fatpoint/mpoly.hpp"

namespace fatpoint {

/// Series literal: `c0 + c1*t + c2*t^2`, field-element literals `3`, `-1/2`.
TruncatedSeries parse_series(const std::string& text, const FieldSpec& f, std::size_t precision);

/// Polynomial literal over y1..yn (and `yp` for the auxiliary variable when
/// allow_aux is set, mapped to the last index): `(1+t)*y1^2*y2 - 3*y2 + t^2`.
MultiPoly parse_poly(const std::string& text, const FieldSpec& f, int nvars, std::size_t precision,
                     bool allow_aux = false);

} // namespace fatpoint

#endif
