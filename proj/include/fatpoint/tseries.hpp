#ifndef FATPOINT_TSERIES_HPP
#define FATPOINT_TSERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fatpoint/field.hpp"

namespace fatpoint {

/// t-adic valuation of a truncated series. `precision_limited` flags the
/// series that vanish at their stored precision: the valuation is then only
/// known to be >= value (= the precision).
struct Valuation {
  std::size_t value = 0;
  bool precision_limited = false;
};

/// An element of k[t]/(t^N) with explicit precision N = coeffs().size().
/// Value semantics: equal iff precisions and all coefficients agree.
class TruncatedSeries {
public:
  TruncatedSeries() = default;
  TruncatedSeries(const FieldSpec& f, std::size_t precision);

  static TruncatedSeries constant(const FieldSpec& f, const FieldElement& c, std::size_t precision);
  static TruncatedSeries from_int(const FieldSpec& f, long long n, std::size_t precision);
  static TruncatedSeries t(const FieldSpec& f, std::size_t precision); // the variable
  static TruncatedSeries monomial(const FieldSpec& f, const FieldElement& c, std::size_t power,
                                  std::size_t precision);

  const FieldSpec& spec() const { return spec_; }
  std::size_t precision() const { return c_.size(); }
  const FieldElement& coeff(std::size_t j) const { return c_[j]; }
  void set_coeff(std::size_t j, const FieldElement& v) { c_[j] = v; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const { return !c_.empty() && !c_[0].is_zero(); }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator-() const;

  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  std::string str() const;

private:
  friend TruncatedSeries align_spec_check(const TruncatedSeries&, const TruncatedSeries&);

  FieldSpec spec_;
  std::vector<FieldElement> c_;
};

/// a^{-1} mod t^N. NotAUnit when the constant coefficient vanishes.
TruncatedSeries invert(const TruncatedSeries& a);

Valuation valuation(const TruncatedSeries& a);

/// Truncation k[t]/(t^N) -> k[t]/(t^M), M <= N. PrecisionRequest otherwise.
TruncatedSeries reduce_precision(const TruncatedSeries& a, std::size_t M);

/// a * t^k, truncated at the precision of a.
TruncatedSeries shift(const TruncatedSeries& a, std::size_t k);

TruncatedSeries pow(const TruncatedSeries& a, long long e); // negative e inverts first

} // namespace fatpoint

#endif
