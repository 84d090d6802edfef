#ifndef FATPOINT_FIELD_HPP
#define FATPOINT_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "fatpoint/errors.hpp"

namespace fatpoint {

/// The base field k: exact rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint64_t p = 0; // characteristic; 0 for the rationals

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
  static FieldSpec prime_field(std::uint64_t p);

  std::uint64_t characteristic() const { return p; }

  bool operator==(const FieldSpec& o) const = default;
};

bool is_prime_u64(std::uint64_t n);

/// An exact scalar of a FieldSpec. Rationals are always-reduced GMP
/// fractions; F_p elements are canonical representatives in [0, p).
class FieldElement {
public:
  FieldElement() = default;

  static FieldElement zero(const FieldSpec& f) { return from_int(f, 0); }
  static FieldElement one(const FieldSpec& f) { return from_int(f, 1); }
  static FieldElement from_int(const FieldSpec& f, long long n);
  static FieldElement from_mpq(const FieldSpec& f, const mpq_class& q);
  /// num/den with exact division semantics in either field.
  static FieldElement fraction(const FieldSpec& f, long long num, long long den);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const; // DivisionByZero on 0

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Exact rational payload; only meaningful over the rationals.
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  /// Canonical residue; only meaningful over a prime field.
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }

  std::string str() const;

private:
  void check_same(const FieldElement& o) const;
  mpq_class& q() { return std::get<mpq_class>(v_); }
  const mpq_class& q() const { return std::get<mpq_class>(v_); }
  std::uint64_t& r() { return std::get<std::uint64_t>(v_); }
  std::uint64_t r() const { return std::get<std::uint64_t>(v_); }

  FieldSpec spec_;
  // prime-field residues stay allocation-free; rationals carry GMP payloads
  std::variant<std::uint64_t, mpq_class> v_ = std::uint64_t{0};
};

} // namespace fatpoint

#endif
