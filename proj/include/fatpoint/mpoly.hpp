#ifndef FATPOINT_MPOLY_HPP
#define FATPOINT_MPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fatpoint/tseries.hpp"

namespace fatpoint {

using ExpVec = std::vector<int>;

/// A polynomial in y_1..y_nvars over k[t]/(t^N). Terms map exponent vectors
/// to nonzero coefficient series; all coefficients share one precision.
/// Variable indices are 0-based internally (variable i is y_{i+1}); the
/// auxiliary certificate variable y' is by convention the last index.
class MultiPoly {
public:
  MultiPoly() = default;
  MultiPoly(const FieldSpec& f, int nvars, std::size_t precision);

  static MultiPoly from_series(const TruncatedSeries& c, int nvars);
  static MultiPoly from_int(const FieldSpec& f, long long n, int nvars, std::size_t precision);
  static MultiPoly variable(const FieldSpec& f, int var, int nvars, std::size_t precision);
  static MultiPoly monomial(const TruncatedSeries& c, const ExpVec& e);

  const FieldSpec& spec() const { return spec_; }
  int nvars() const { return nvars_; }
  std::size_t precision() const { return prec_; }
  const std::map<ExpVec, TruncatedSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Degree in variable `var`; -1 for the zero polynomial.
  int degree_in(int var) const;
  /// True when no term involves variables with index >= bound.
  bool vars_below(int bound) const;

  /// Coefficient of y_var^k, as a polynomial with the same nvars.
  MultiPoly coeff_of(int var, int k) const;
  /// The coefficient series of the constant term (all exponents zero).
  TruncatedSeries constant_term() const;
  /// True iff the polynomial is a constant series (no variables).
  bool is_constant() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scale(const TruncatedSeries& c) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// All coefficients truncated to precision M.
  MultiPoly at_precision(std::size_t M) const;
  /// Same terms reinterpreted over `nvars` variables (must not lose any).
  MultiPoly with_nvars(int nvars) const;

  void add_term(const ExpVec& e, const TruncatedSeries& c);

  /// Canonical rendering; with `last_var_aux` the last variable prints as y'.
  std::string str(bool last_var_aux = false) const;

private:
  void check_compatible(const MultiPoly& o) const;

  FieldSpec spec_;
  int nvars_ = 0;
  std::size_t prec_ = 0;
  std::map<ExpVec, TruncatedSeries> terms_;
};

/// Division f = q*g + r with deg_var(r) < deg_var(g), for g monic in `var`
/// (leading y_var-coefficient the constant series 1). NotMonic otherwise.
std::pair<MultiPoly, MultiPoly> divide_monic(const MultiPoly& f, const MultiPoly& g, int var);

/// f with y_var replaced by s (expanded, truncated). Triangular use only:
/// s must not involve y_j for j >= var.
MultiPoly substitute(const MultiPoly& f, int var, const MultiPoly& s);

enum class Face { zero, infinity };

/// Codimension-1 face: y_var = 0 substitutes zero; y_var = infinity takes
/// the leading y_var-coefficient.
MultiPoly face_at(const MultiPoly& f, int var, Face eps);

/// Additive Gauss valuation: min over terms of the coefficient valuation.
Valuation gauss_valuation(const MultiPoly& f);

} // namespace fatpoint

#endif
