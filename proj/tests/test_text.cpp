#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoint/text.hpp"
#include "support.hpp"

using namespace fatpoint;
using fatpoint::testing::Gen;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("series literals") {
  TruncatedSeries s = parse_series("1 - 1/2*t + t^2", Q, 4);
  CHECK(s.coeff(0) == FieldElement::from_int(Q, 1));
  CHECK(s.coeff(1) == FieldElement::fraction(Q, -1, 2));
  CHECK(s.coeff(2) == FieldElement::from_int(Q, 1));
  CHECK(s.coeff(3).is_zero());
}

TEST_CASE("polynomial literals") {
  MultiPoly p = parse_poly("(1+t)*y1^2*y2 - 3*y2 + t^2", Q, 2, 4);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.coeff_of(0, 2).coeff_of(1, 1).constant_term() == parse_series("1+t", Q, 4));
}

TEST_CASE("prime field literals reduce") {
  FieldSpec F = FieldSpec::prime_field(7);
  TruncatedSeries s = parse_series("10 + 9*t", F, 2);
  CHECK(s.coeff(0) == FieldElement::from_int(F, 3));
  CHECK(s.coeff(1) == FieldElement::from_int(F, 2));
}

TEST_CASE("aux variable gating") {
  CHECK_THROWS_AS(parse_poly("yp + y1", Q, 2, 3), error);
  MultiPoly q = parse_poly("yp + y1", Q, 2, 3, true);
  CHECK(q.degree_in(1) == 1);
}

TEST_CASE("parse errors carry position") {
  try {
    parse_poly("y1 + @", Q, 1, 3);
    FAIL("expected a parse error");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_poly("y3", Q, 2, 3), error);
  CHECK_THROWS_AS(parse_poly("y1 y2", Q, 2, 3), error);
}

TEST_CASE("printing round-trips through the parser") {
  Gen g(11);
  for (FieldSpec f : {Q, FieldSpec::prime_field(101)}) {
    for (int i = 0; i < 60; ++i) {
      TruncatedSeries s = g.series(f, 5);
      CHECK(parse_series(s.str(), f, 5) == s);
    }
    for (int i = 0; i < 60; ++i) {
      MultiPoly p = g.poly(f, 3, 4, 3, 5);
      CHECK(parse_poly(p.str(), f, 3, 4) == p);
    }
  }
}
