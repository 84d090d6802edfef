#include "fatpoint/field.hpp"

namespace fatpoint {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p))
    throw error(errc::validation_failure, "prime field modulus " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 31))
    throw error(errc::validation_failure, "prime field modulus too large");
  return FieldSpec{Kind::prime_field, p};
}

namespace {

std::uint64_t mod_reduce(long long n, std::uint64_t p) {
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p), a in [1, p)
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt; newt = tmp;
    tmp = r - q * newr;
    r = newr; newr = tmp;
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

} // namespace

FieldElement FieldElement::from_int(const FieldSpec& f, long long n) {
  FieldElement e;
  e.spec_ = f;
  if (f.kind == FieldSpec::Kind::rationals)
    e.v_ = mpq_class(static_cast<long>(n));
  else
    e.v_ = mod_reduce(n, f.p);
  return e;
}

FieldElement FieldElement::from_mpq(const FieldSpec& f, const mpq_class& q) {
  if (f.kind != FieldSpec::Kind::rationals)
    throw error(errc::mixed_fields, "rational literal in a prime field context");
  FieldElement e;
  e.spec_ = f;
  mpq_class qq = q;
  qq.canonicalize();
  e.v_ = std::move(qq);
  return e;
}

FieldElement FieldElement::fraction(const FieldSpec& f, long long num, long long den) {
  if (den == 0) throw error(errc::division_by_zero, "zero denominator");
  if (f.kind == FieldSpec::Kind::rationals) {
    FieldElement e;
    e.spec_ = f;
    mpq_class qq(static_cast<long>(num), static_cast<long>(den));
    qq.canonicalize();
    e.v_ = std::move(qq);
    return e;
  }
  FieldElement e = from_int(f, num);
  FieldElement d = from_int(f, den);
  return e * d.inverse();
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(spec_ == o.spec_))
    throw error(errc::mixed_fields, "operands belong to different fields");
}

bool FieldElement::is_zero() const {
  return spec_.kind == FieldSpec::Kind::rationals ? q() == 0 : r() == 0;
}

bool FieldElement::is_one() const {
  return spec_.kind == FieldSpec::Kind::rationals ? q() == 1 : r() == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement e;
  e.spec_ = spec_;
  if (spec_.kind == FieldSpec::Kind::rationals)
    e.v_ = mpq_class(q() + o.q());
  else
    e.v_ = (r() + o.r()) % spec_.p;
  return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  FieldElement e;
  e.spec_ = spec_;
  if (spec_.kind == FieldSpec::Kind::rationals)
    e.v_ = mpq_class(q() - o.q());
  else
    e.v_ = (r() + spec_.p - o.r()) % spec_.p;
  return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  FieldElement e;
  e.spec_ = spec_;
  if (spec_.kind == FieldSpec::Kind::rationals)
    e.v_ = mpq_class(q() * o.q());
  else
    e.v_ = (r() * o.r()) % spec_.p; // p < 2^31, no overflow
  return e;
}

FieldElement FieldElement::operator-() const {
  FieldElement e;
  e.spec_ = spec_;
  if (spec_.kind == FieldSpec::Kind::rationals)
    e.v_ = mpq_class(-q());
  else
    e.v_ = r() == 0 ? std::uint64_t{0} : spec_.p - r();
  return e;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
  FieldElement e;
  e.spec_ = spec_;
  if (spec_.kind == FieldSpec::Kind::rationals)
    e.v_ = mpq_class(1 / q());
  else
    e.v_ = mod_inv(r(), spec_.p);
  return e;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!(spec_ == o.spec_)) return false;
  return spec_.kind == FieldSpec::Kind::rationals ? q() == o.q() : r() == o.r();
}

std::string FieldElement::str() const {
  if (spec_.kind == FieldSpec::Kind::rationals) return q().get_str();
  return std::to_string(r());
}

} // namespace fatpoint
