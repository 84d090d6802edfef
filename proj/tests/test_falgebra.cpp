#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoint/text.hpp"
#include "support.hpp"

using namespace fatpoint;
using fatpoint::testing::Gen;

namespace {
const FieldSpec Q = FieldSpec::rationals();
constexpr std::size_t N = 6;

FiniteAlgebra quad_algebra() {
  return FiniteAlgebra(Q, N, {parse_poly("y1^2 - (1+t)", Q, 1, N)});
}

TruncatedSeries S(const std::string& s, const FieldSpec& f = Q, std::size_t prec = N) {
  return parse_series(s, f, prec);
}
} // namespace

TEST_CASE("normal forms") {
  FiniteAlgebra A = quad_algebra();
  CHECK(A.rank() == 2);
  CHECK(A.to_poly(A.reduce(parse_poly("y1^3", Q, 1, N))) == parse_poly("(1+t)*y1", Q, 1, N));
  CHECK(A.is_zero(A.reduce(parse_poly("y1^2 - (1+t)", Q, 1, N))));
  CHECK(A.to_poly(A.reduce(parse_poly("3", Q, 1, N))) == parse_poly("3", Q, 1, N));
}

TEST_CASE("reduction is the identity on basis monomials") {
  FiniteAlgebra A(Q, N,
                  {parse_poly("y1^2 - (1+t)", Q, 2, N), parse_poly("y2^2 - y1 - 3", Q, 2, N)});
  CHECK(A.rank() == 4);
  CHECK(A.degrees() == std::vector<int>{2, 2});
  for (std::size_t k = 0; k < A.rank(); ++k) {
    MultiPoly mono = MultiPoly::monomial(TruncatedSeries::from_int(Q, 1, N), A.basis()[k]);
    AlgebraElement u = A.reduce(mono);
    for (std::size_t i = 0; i < A.rank(); ++i)
      CHECK(u.coords[i].is_one() == (i == k));
  }
}

TEST_CASE("algebra multiplication") {
  FiniteAlgebra A = quad_algebra();
  AlgebraElement y = A.reduce(parse_poly("y1", Q, 1, N));
  AlgebraElement yy = A.mul(y, y);
  CHECK(A.to_poly(yy) == parse_poly("1 + t", Q, 1, N));
  Gen g(20);
  for (int i = 0; i < 100; ++i) {
    AlgebraElement u = A.reduce(g.poly(Q, 1, N, 3, 3));
    AlgebraElement v = A.reduce(g.poly(Q, 1, N, 3, 3));
    CHECK(A.mul(u, v) == A.mul(v, u));
    CHECK(A.mul(u, A.one()) == u);
  }
}

TEST_CASE("multiplication matrices") {
  FiniteAlgebra A = quad_algebra();
  AlgebraElement y = A.reduce(parse_poly("y1", Q, 1, N));
  SeriesMatrix M = A.mult_matrix(y);
  // basis {1, y}: y*1 = y, y*y = 1+t
  CHECK(M.at(0, 0).is_zero());
  CHECK(M.at(1, 0) == S("1"));
  CHECK(M.at(0, 1) == S("1 + t"));
  CHECK(M.at(1, 1).is_zero());

  SeriesMatrix I = A.mult_matrix(A.one());
  CHECK(I.at(0, 0).is_one());
  CHECK(I.at(1, 1).is_one());
  CHECK(I.at(0, 1).is_zero());
}

TEST_CASE("the representation property of multiplication matrices") {
  FiniteAlgebra A = quad_algebra();
  Gen g(21);
  auto matmul = [&](const SeriesMatrix& X, const SeriesMatrix& Y) {
    SeriesMatrix Z(X.rows, Y.cols, TruncatedSeries(Q, N));
    for (std::size_t i = 0; i < X.rows; ++i)
      for (std::size_t j = 0; j < Y.cols; ++j)
        for (std::size_t k = 0; k < X.cols; ++k)
          Z.at(i, j) = Z.at(i, j) + X.at(i, k) * Y.at(k, j);
    return Z;
  };
  for (int i = 0; i < 30; ++i) {
    AlgebraElement u = A.reduce(g.poly(Q, 1, N, 3, 3));
    AlgebraElement v = A.reduce(g.poly(Q, 1, N, 3, 3));
    SeriesMatrix lhs = matmul(A.mult_matrix(u), A.mult_matrix(v));
    SeriesMatrix rhs = A.mult_matrix(A.mul(u, v));
    CHECK(lhs.a == rhs.a);
  }
}

TEST_CASE("norms by exact determinants") {
  FiniteAlgebra A = quad_algebra();
  AlgebraElement y = A.reduce(parse_poly("y1", Q, 1, N));
  CHECK(A.norm(y) == -S("1 + t"));
  AlgebraElement c = A.from_series(S("3"));
  CHECK(A.norm(c) == S("9"));
  Gen g(22);
  for (int i = 0; i < 60; ++i) {
    AlgebraElement u = A.reduce(g.poly(Q, 1, N, 3, 3));
    AlgebraElement v = A.reduce(g.poly(Q, 1, N, 3, 3));
    CHECK(A.norm(A.mul(u, v)) == A.norm(u) * A.norm(v));
  }
}

TEST_CASE("unit detection through norms") {
  FiniteAlgebra A = quad_algebra();
  CHECK(A.is_unit(A.reduce(parse_poly("y1", Q, 1, N))));
  CHECK(!A.is_unit(A.zero()));
  // norm of y - 1 is (1)^2 - (1+t) = -t: not a unit
  CHECK(!A.is_unit(A.reduce(parse_poly("y1 - 1", Q, 1, N))));
  CHECK(A.norm(A.reduce(parse_poly("y1 - 1", Q, 1, N))) == -TruncatedSeries::t(Q, N));

  // positive-valuation norm: the class of y over y^2 - t
  FiniteAlgebra T(Q, N, {parse_poly("y1^2 - t", Q, 1, N)});
  AlgebraElement y = T.reduce(parse_poly("y1", Q, 1, N));
  CHECK(T.norm(y) == -TruncatedSeries::t(Q, N));
  CHECK(!T.is_unit(y));
}

TEST_CASE("minimal polynomials over the base") {
  FiniteAlgebra A = quad_algebra();
  std::vector<AlgebraElement> base{A.one()};

  AlgebraElement y = A.reduce(parse_poly("y1", Q, 1, N));
  MinimalPolyResult mp = A.minimal_polynomial(y, base);
  REQUIRE(mp.degree == 2);
  CHECK(mp.coeffs[0][0] == S("1 + t")); // x^2 = (1+t) * 1
  CHECK(mp.coeffs[1][0].is_zero());

  AlgebraElement y1p = A.reduce(parse_poly("y1 + 1", Q, 1, N));
  MinimalPolyResult mp2 = A.minimal_polynomial(y1p, base);
  REQUIRE(mp2.degree == 2);
  // x^2 - 2x - t = 0, so x^2 = t * 1 + 2 * x
  CHECK(mp2.coeffs[0][0] == TruncatedSeries::t(Q, N));
  CHECK(mp2.coeffs[1][0] == S("2"));
  CHECK(mp2.consumed == 0);

  AlgebraElement c = A.from_series(S("5 + t"));
  MinimalPolyResult mp3 = A.minimal_polynomial(c, base);
  CHECK(mp3.degree == 1);
  CHECK(mp3.coeffs[0][0] == S("5 + t"));
}

TEST_CASE("minimal polynomial evaluated at its element vanishes") {
  Gen g(23);
  FiniteAlgebra A(Q, N,
                  {parse_poly("y1^2 - (1+t)", Q, 2, N), parse_poly("y2^2 - y1 - 3", Q, 2, N)});
  CHECK(A.rank() == 4);
  std::vector<AlgebraElement> base{A.one()};
  for (int i = 0; i < 20; ++i) {
    AlgebraElement b = A.reduce(g.poly(Q, 2, N, 1, 3));
    MinimalPolyResult mp = A.minimal_polynomial(b, base);
    CHECK(A.rank() % static_cast<std::size_t>(mp.degree) == 0);
    // evaluate x^d - sum coeffs[e] x^e at b
    AlgebraElement acc = A.one();
    for (int e = 0; e < mp.degree; ++e) acc = A.mul(acc, b);
    for (int e = 0; e < mp.degree; ++e) {
      AlgebraElement pw = A.one();
      for (int k = 0; k < e; ++k) pw = A.mul(pw, b);
      acc = A.sub(acc, A.mul(A.from_series(mp.coeffs[static_cast<std::size_t>(e)][0]), pw));
    }
    CHECK(A.is_zero(acc));
  }
}

TEST_CASE("norm transitivity on a rank-4 tower") {
  // A = Q_N[y1, y2]/(y1^2 - (1+t), y2^2 - y1 - 3), S = Q_N[y1]/(y1^2 - (1+t))
  FiniteAlgebra A(Q, N,
                  {parse_poly("y1^2 - (1+t)", Q, 2, N), parse_poly("y2^2 - y1 - 3", Q, 2, N)});
  FiniteAlgebra Ssub(Q, N, {parse_poly("y1^2 - (1+t)", Q, 1, N)});

  // b = y1 + y2; the S-linear matrix of b on {1, y2} has entries in S:
  //   b*1  = y1 + y2          -> (y1, 1)
  //   b*y2 = y1 y2 + y1 + 3   -> (y1 + 3, y1)
  // det_S = y1^2 - (y1 + 3) = (1+t) - y1 - 3 = -y1 + t - 2
  AlgebraElement detS = Ssub.reduce(parse_poly("t - 2 - y1", Q, 1, N));
  TruncatedSeries expected = Ssub.norm(detS);

  AlgebraElement b = A.reduce(parse_poly("y1 + y2", Q, 2, N));
  CHECK(A.norm(b) == expected);
  // and the frozen value of the composite: t^2 - 5t + 3
  CHECK(expected == S("3 - 5*t + t^2"));
}

TEST_CASE("solver reports consumed precision on non-unit pivots") {
  // x * t = t^2 has the solution x = t with one coefficient consumed
  SeriesMatrix A(1, 1, TruncatedSeries::t(Q, 4));
  DvrSolveResult r = dvr_solve(A, {shift(TruncatedSeries::t(Q, 4), 1)}, Q, 4);
  REQUIRE(r.consistent);
  CHECK(r.consumed == 1);
  CHECK(reduce_precision(r.x[0], 3) == reduce_precision(TruncatedSeries::t(Q, 4), 3));

  // t * x = 1 has no solution over k[[t]]
  DvrSolveResult bad = dvr_solve(A, {TruncatedSeries::from_int(Q, 1, 4)}, Q, 4);
  CHECK(!bad.consistent);
}

TEST_CASE("solver refuses pivots beyond the remaining precision") {
  // first pivot t^2 consumes two coefficients; the second column is only
  // nonzero at t^3, past the remaining precision of 2
  TruncatedSeries z(Q, 4);
  SeriesMatrix A(2, 2, z);
  A.at(0, 0) = shift(TruncatedSeries::from_int(Q, 1, 4), 2); // t^2
  A.at(1, 1) = shift(TruncatedSeries::from_int(Q, 1, 4), 3); // t^3
  std::vector<TruncatedSeries> b{A.at(0, 0), A.at(1, 1)};
  CHECK_THROWS_AS(dvr_solve(A, b, Q, 4), error);
  try {
    dvr_solve(A, b, Q, 4);
  } catch (const error& e) {
    CHECK(e.code() == errc::precision_exhausted);
  }
}

TEST_CASE("triangularized coordinates present the image") {
  FiniteAlgebra A = quad_algebra();
  AlgebraElement y = A.reduce(parse_poly("y1", Q, 1, N));
  Triangularization tr = triangularize_coordinates(A, {y});
  REQUIRE(tr.polys.size() == 1);
  CHECK(tr.polys[0] == parse_poly("y1^2 - (1+t)", Q, 1, N));
  CHECK(tr.image_rank == 2);

  // collapsing coordinates: the constant 2 generates a rank-1 image
  Triangularization tr2 = triangularize_coordinates(A, {A.from_series(S("2"))});
  CHECK(tr2.image_rank == 1);
  CHECK(tr2.polys[0] == parse_poly("y1 - 2", Q, 1, N));
}
