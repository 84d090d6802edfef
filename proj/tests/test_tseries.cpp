#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoint/text.hpp"
#include "support.hpp"

using namespace fatpoint;
using fatpoint::testing::Gen;

namespace {
const FieldSpec Q = FieldSpec::rationals();

TruncatedSeries S(const std::string& text, std::size_t prec, const FieldSpec& f = Q) {
  return parse_series(text, f, prec);
}
} // namespace

TEST_CASE("ring arithmetic truncates") {
  CHECK(S("1 + t", 3) * S("1 - t", 3) == S("1 - t^2", 3));
  TruncatedSeries t2 = TruncatedSeries::t(Q, 2);
  CHECK((t2 * t2).is_zero());
  Gen g(1);
  for (int i = 0; i < 20; ++i) {
    TruncatedSeries a = g.series(Q, 5);
    CHECK(a * S("1", 5) == a);
  }
}

TEST_CASE("inversion") {
  CHECK(invert(S("1 + t", 3)) == S("1 - t + t^2", 3));
  CHECK(invert(S("2", 2)) == S("1/2", 2));
  CHECK_THROWS_AS(invert(TruncatedSeries::t(Q, 3)), error);
}

TEST_CASE("inversion is an involution on units") {
  Gen g(2);
  for (FieldSpec f : {Q, FieldSpec::prime_field(101)})
    for (int i = 0; i < 50; ++i) {
      TruncatedSeries a = g.unit_series(f, 6);
      CHECK(invert(invert(a)) == a);
      CHECK((a * invert(a)).is_one());
    }
}

TEST_CASE("valuation") {
  CHECK(valuation(S("1 + t", 3)).value == 0);
  Valuation v = valuation(S("t^2 + t^3", 5));
  CHECK(v.value == 2);
  CHECK(!v.precision_limited);
  Valuation z = valuation(TruncatedSeries(Q, 4));
  CHECK(z.value == 4);
  CHECK(z.precision_limited);
}

TEST_CASE("valuation is additive below precision") {
  Gen g(3);
  for (int i = 0; i < 50; ++i) {
    std::size_t prec = 8;
    TruncatedSeries a = shift(g.unit_series(Q, prec), static_cast<std::size_t>(g.ll(0, 2)));
    TruncatedSeries b = shift(g.unit_series(Q, prec), static_cast<std::size_t>(g.ll(0, 2)));
    Valuation va = valuation(a), vb = valuation(b);
    if (va.value + vb.value < prec)
      CHECK(valuation(a * b).value == va.value + vb.value);
  }
}

TEST_CASE("precision reduction") {
  CHECK(reduce_precision(S("1 + t + t^3", 5), 2) == S("1 + t", 2));
  TruncatedSeries a = S("1 + 2*t", 3);
  CHECK(reduce_precision(a, 3) == a);
  CHECK_THROWS_AS(reduce_precision(S("1", 3), 5), error);
}

TEST_CASE("precision reduction is a ring homomorphism") {
  Gen g(4);
  for (int i = 0; i < 50; ++i) {
    TruncatedSeries a = g.series(Q, 6), b = g.series(Q, 6);
    CHECK(reduce_precision(a * b, 3) == reduce_precision(a, 3) * reduce_precision(b, 3));
    CHECK(reduce_precision(a + b, 3) == reduce_precision(a, 3) + reduce_precision(b, 3));
  }
}

TEST_CASE("ring axioms at small precisions") {
  Gen g(5);
  for (std::size_t prec = 1; prec <= 8; ++prec) {
    for (int i = 0; i < 30; ++i) {
      TruncatedSeries a = g.series(Q, prec), b = g.series(Q, prec), c = g.series(Q, prec);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("equality is precision-aware") {
  CHECK(S("1 + t", 3) != S("1 + t", 4));
  CHECK(TruncatedSeries(Q, 2) != TruncatedSeries(Q, 3));
}
