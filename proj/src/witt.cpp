#include "fatpoint/witt.hpp"

#include <numeric>

namespace fatpoint {

namespace {

void check_witt(const WittVector& x) {
  if (x.series.precision() != x.m + 1)
    throw error(errc::shape_mismatch, "witt vector series must have precision m + 1");
  if (!x.series.coeff(0).is_one())
    throw error(errc::not_relative, "witt vector series must have constant coefficient 1");
}

void check_pair(const WittVector& x, const WittVector& y) {
  check_witt(x);
  check_witt(y);
  if (x.m != y.m) throw error(errc::shape_mismatch, "witt vectors of different lengths");
  if (!(x.series.spec() == y.series.spec()))
    throw error(errc::mixed_fields, "witt vectors over different fields");
}

} // namespace

WittVector witt_zero(const FieldSpec& f, std::size_t m) {
  return WittVector{m, TruncatedSeries::from_int(f, 1, m + 1)};
}

WittVector witt_add(const WittVector& x, const WittVector& y) {
  check_pair(x, y);
  return WittVector{x.m, x.series * y.series};
}

WittVector witt_neg(const WittVector& x) {
  check_witt(x);
  return WittVector{x.m, invert(x.series)};
}

std::vector<FieldElement> witt_coordinates(const WittVector& x) {
  check_witt(x);
  const FieldSpec& f = x.series.spec();
  std::vector<FieldElement> a;
  a.reserve(x.m);
  TruncatedSeries g = x.series;
  for (std::size_t i = 1; i <= x.m; ++i) {
    FieldElement ai = -g.coeff(i);
    a.push_back(ai);
    if (!ai.is_zero()) {
      // divide by 1 - a_i t^i
      TruncatedSeries gen = TruncatedSeries::from_int(f, 1, x.m + 1) -
                            TruncatedSeries::monomial(f, ai, i, x.m + 1);
      g = g * invert(gen);
    }
  }
  return a;
}

WittVector witt_from_coordinates(const FieldSpec& f, const std::vector<FieldElement>& a) {
  std::size_t m = a.size();
  TruncatedSeries s = TruncatedSeries::from_int(f, 1, m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    if (a[i - 1].is_zero()) continue;
    s = s * (TruncatedSeries::from_int(f, 1, m + 1) -
             TruncatedSeries::monomial(f, a[i - 1], i, m + 1));
  }
  return WittVector{m, s};
}

WittVector teichmuller(const FieldElement& a, std::size_t m) {
  const FieldSpec& f = a.spec();
  TruncatedSeries s = TruncatedSeries::from_int(f, 1, m + 1) -
                      TruncatedSeries::monomial(f, a, 1, m + 1);
  return WittVector{m, s};
}

WittVector verschiebung(std::size_t r, const WittVector& x) {
  check_witt(x);
  if (r < 1) throw error(errc::shape_mismatch, "verschiebung index must be at least 1");
  const FieldSpec& f = x.series.spec();
  TruncatedSeries s(f, x.m + 1);
  for (std::size_t j = 0; j * r <= x.m; ++j) s.set_coeff(j * r, x.series.coeff(j));
  return WittVector{x.m, s};
}

WittVector frobenius_teichmuller(std::size_t r, const FieldElement& a, std::size_t m) {
  FieldElement p = FieldElement::one(a.spec());
  for (std::size_t k = 0; k < r; ++k) p = p * a;
  return teichmuller(p, m);
}

WittVector witt_mul(const WittVector& x, const WittVector& y) {
  check_pair(x, y);
  const FieldSpec& f = x.series.spec();
  std::size_t m = x.m;
  std::vector<FieldElement> a = witt_coordinates(x);
  std::vector<FieldElement> b = witt_coordinates(y);
  WittVector acc = witt_zero(f, m);
  for (std::size_t i = 1; i <= m; ++i) {
    if (a[i - 1].is_zero()) continue;
    for (std::size_t j = 1; j <= m; ++j) {
      if (b[j - 1].is_zero()) continue;
      std::size_t g = std::gcd(i, j);
      std::size_t ord = i / g * j; // i*j/g
      if (ord > m) continue;
      // (1 - a^{j/g} b^{i/g} t^{i j / g})^g
      FieldElement c = FieldElement::one(f);
      for (std::size_t k = 0; k < j / g; ++k) c = c * a[i - 1];
      for (std::size_t k = 0; k < i / g; ++k) c = c * b[j - 1];
      TruncatedSeries gen = TruncatedSeries::from_int(f, 1, m + 1) -
                            TruncatedSeries::monomial(f, c, ord, m + 1);
      acc.series = acc.series * pow(gen, static_cast<long long>(g));
    }
  }
  return acc;
}

std::vector<FieldElement> ghost(const WittVector& x) {
  check_witt(x);
  const FieldSpec& f = x.series.spec();
  std::size_t m = x.m;
  // -t f'/f = sum gh_r t^r, computed as (-t f') * f^{-1} without division by
  // integers, so it is exact in any characteristic.
  TruncatedSeries mtfp(f, m + 1); // -t f'
  for (std::size_t j = 1; j <= m; ++j) {
    FieldElement jf = FieldElement::from_int(f, static_cast<long long>(j));
    mtfp.set_coeff(j, -(jf * x.series.coeff(j)));
  }
  TruncatedSeries w = mtfp * invert(x.series);
  std::vector<FieldElement> gh;
  gh.reserve(m);
  for (std::size_t r = 1; r <= m; ++r) gh.push_back(w.coeff(r));
  return gh;
}

WittVector witt_from_relative(const TruncatedSeries& u) {
  if (u.precision() < 2)
    throw error(errc::precision_request, "relative unit needs precision at least 2");
  if (!u.coeff(0).is_one())
    throw error(errc::not_relative, "unit is not congruent to 1 mod t");
  return WittVector{u.precision() - 1, u};
}

TruncatedSeries relative_from_witt(const WittVector& x) {
  check_witt(x);
  return x.series;
}

} // namespace fatpoint
