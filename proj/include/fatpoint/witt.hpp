#ifndef FATPOINT_WITT_HPP
#define FATPOINT_WITT_HPP

#include <vector>

#include "fatpoint/tseries.hpp"

namespace fatpoint {

/// A big Witt vector of length m in the unit-series representation:
/// a series 1 + a_1 t + ... + a_m t^m at precision m + 1. The group law is
/// series multiplication.
struct WittVector {
  std::size_t m = 1;
  TruncatedSeries series; // precision m + 1, constant coefficient exactly 1

  bool operator==(const WittVector& o) const { return m == o.m && series == o.series; }
};

WittVector witt_zero(const FieldSpec& f, std::size_t m);
WittVector witt_add(const WittVector& x, const WittVector& y);
WittVector witt_neg(const WittVector& x);

/// The unique coordinates with series = prod (1 - a_i t^i) mod t^{m+1}.
std::vector<FieldElement> witt_coordinates(const WittVector& x);
WittVector witt_from_coordinates(const FieldSpec& f, const std::vector<FieldElement>& a);

/// [a] = 1 - a t.
WittVector teichmuller(const FieldElement& a, std::size_t m);
/// V_r(x)(t) = x(t^r), truncated.
WittVector verschiebung(std::size_t r, const WittVector& x);
/// F_r on Teichmuller representatives: F_r([a]) = [a^r].
WittVector frobenius_teichmuller(std::size_t r, const FieldElement& a, std::size_t m);

/// Bilinear extension of (1 - a t^i) . (1 - b t^j) =
/// (1 - a^{j/g} b^{i/g} t^{ij/g})^g with g = gcd(i, j).
WittVector witt_mul(const WittVector& x, const WittVector& y);

/// Ghost components: coefficients of -t f'(t)/f(t). A ring homomorphism to
/// k^m componentwise, faithful in characteristic 0.
std::vector<FieldElement> ghost(const WittVector& x);

/// The n = 1 relative-part identification: a unit congruent to 1 mod t at
/// precision m + 1 is a Witt vector on the nose. NotRelative when u(0) != 1.
WittVector witt_from_relative(const TruncatedSeries& u);
TruncatedSeries relative_from_witt(const WittVector& x);

} // namespace fatpoint

#endif
