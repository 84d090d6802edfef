#include "fatpoint/tseries.hpp"

#include <algorithm>

namespace fatpoint {

TruncatedSeries::TruncatedSeries(const FieldSpec& f, std::size_t precision) : spec_(f) {
  if (precision == 0)
    throw error(errc::precision_request, "series precision must be at least 1");
  c_.assign(precision, FieldElement::zero(f));
}

TruncatedSeries TruncatedSeries::constant(const FieldSpec& f, const FieldElement& c,
                                          std::size_t precision) {
  TruncatedSeries s(f, precision);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_int(const FieldSpec& f, long long n, std::size_t precision) {
  return constant(f, FieldElement::from_int(f, n), precision);
}

TruncatedSeries TruncatedSeries::t(const FieldSpec& f, std::size_t precision) {
  return monomial(f, FieldElement::one(f), 1, precision);
}

TruncatedSeries TruncatedSeries::monomial(const FieldSpec& f, const FieldElement& c,
                                          std::size_t power, std::size_t precision) {
  TruncatedSeries s(f, precision);
  if (power < precision) s.c_[power] = c;
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool TruncatedSeries::is_one() const {
  if (c_.empty() || !c_[0].is_one()) return false;
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return false;
  return true;
}

namespace {

void check_specs(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.spec() == b.spec()))
    throw error(errc::mixed_fields, "series over different fields");
}

} // namespace

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_specs(*this, o);
  std::size_t n = std::min(precision(), o.precision());
  TruncatedSeries r(spec_, n);
  for (std::size_t j = 0; j < n; ++j) r.c_[j] = c_[j] + o.c_[j];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_specs(*this, o);
  std::size_t n = std::min(precision(), o.precision());
  TruncatedSeries r(spec_, n);
  for (std::size_t j = 0; j < n; ++j) r.c_[j] = c_[j] - o.c_[j];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_specs(*this, o);
  std::size_t n = std::min(precision(), o.precision());
  TruncatedSeries r(spec_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  if (!(spec_ == o.spec_) || precision() != o.precision()) return false;
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != o.c_[j]) return false;
  return true;
}

TruncatedSeries invert(const TruncatedSeries& a) {
  if (!a.is_unit())
    throw error(errc::not_a_unit, "series has zero constant coefficient");
  std::size_t n = a.precision();
  TruncatedSeries r(a.spec(), n);
  FieldElement u = a.coeff(0).inverse();
  r.set_coeff(0, u);
  // b_j = -u * sum_{i=1..j} a_i b_{j-i}
  for (std::size_t j = 1; j < n; ++j) {
    FieldElement acc = FieldElement::zero(a.spec());
    for (std::size_t i = 1; i <= j; ++i) acc = acc + a.coeff(i) * r.coeff(j - i);
    r.set_coeff(j, -(u * acc));
  }
  return r;
}

Valuation valuation(const TruncatedSeries& a) {
  for (std::size_t j = 0; j < a.precision(); ++j)
    if (!a.coeff(j).is_zero()) return Valuation{j, false};
  return Valuation{a.precision(), true};
}

TruncatedSeries reduce_precision(const TruncatedSeries& a, std::size_t M) {
  if (M < 1 || M > a.precision())
    throw error(errc::precision_request,
                "requested precision " + std::to_string(M) + " exceeds stored " +
                    std::to_string(a.precision()));
  TruncatedSeries r(a.spec(), M);
  for (std::size_t j = 0; j < M; ++j) r.set_coeff(j, a.coeff(j));
  return r;
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t k) {
  TruncatedSeries r(a.spec(), a.precision());
  for (std::size_t j = 0; j + k < a.precision(); ++j) r.set_coeff(j + k, a.coeff(j));
  return r;
}

TruncatedSeries pow(const TruncatedSeries& a, long long e) {
  TruncatedSeries base = e < 0 ? invert(a) : a;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  TruncatedSeries r = TruncatedSeries::from_int(a.spec(), 1, a.precision());
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    std::string cs = c_[j].str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string term;
    if (j == 0) {
      term = mag;
    } else {
      std::string tp = j == 1 ? "t" : "t^" + std::to_string(j);
      term = mag == "1" ? tp : mag + "*" + tp;
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

} // namespace fatpoint
