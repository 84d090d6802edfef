#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoint/json_io.hpp"
#include "fatpoint/reduction.hpp"
#include "fatpoint/text.hpp"
#include "support.hpp"

using namespace fatpoint;
using fatpoint::testing::Gen;

namespace {
const FieldSpec Q = FieldSpec::rationals();

TruncatedSeries S(const std::string& s, std::size_t prec) { return parse_series(s, Q, prec); }
} // namespace

TEST_CASE("degenerate symbols vanish on construction") {
  MilnorSymbolSum s(Q, 2, 3);
  s.add_term(1, {S("1", 3), S("2", 3)});
  CHECK(s.is_zero());
  s.add_term(2, {S("1 + t", 3), S("3", 3)});
  s.add_term(-2, {S("1 + t", 3), S("3", 3)});
  CHECK(s.is_zero());
}

TEST_CASE("ev0 reduces entries mod t and drops degenerates") {
  MilnorSymbolSum s(Q, 2, 3);
  s.add_term(1, {S("1 + t", 3), S("2", 3)});
  CHECK(ev0(s).is_zero()); // 1+t becomes 1

  MilnorSymbolSum c(Q, 2, 3);
  c.add_term(1, {S("2", 3), S("3", 3)});
  MilnorSymbolSum e = ev0(c);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms()[0].entries == std::vector<TruncatedSeries>{S("2", 1), S("3", 1)});

  MilnorSymbolSum mix(Q, 2, 3);
  mix.add_term(2, {S("1 + t", 3), S("3", 3)});
  mix.add_term(-1, {S("1 + t^2", 3), S("3", 3)});
  CHECK(ev0(mix).is_zero());
}

TEST_CASE("relative splitting at n = 1") {
  MilnorSymbolSum s(Q, 1, 3);
  s.add_term(1, {S("2*(1 + t)", 3)});
  auto [c, u] = relative_split(s);
  CHECK(c == FieldElement::from_int(Q, 2));
  CHECK(u == S("1 + t", 3));

  MilnorSymbolSum s2(Q, 1, 3);
  s2.add_term(1, {S("1 + t^2", 3)});
  auto [c2, u2] = relative_split(s2);
  CHECK(c2.is_one());
  CHECK(u2 == S("1 + t^2", 3));

  MilnorSymbolSum s3(Q, 2, 3);
  s3.add_term(1, {S("2", 3), S("3", 3)});
  CHECK_THROWS_AS(relative_split(s3), error);
}

TEST_CASE("K_1 normal forms") {
  MilnorSymbolSum s(Q, 1, 3);
  s.add_term(1, {S("2", 3)});
  s.add_term(1, {S("3", 3)});
  CHECK(k1_normal_form(s) == S("6", 3));

  MilnorSymbolSum z(Q, 1, 3);
  z.add_term(1, {S("1 + t", 3)});
  z.add_term(-1, {S("1 + t", 3)});
  CHECK(k1_normal_form(z).is_one());

  MilnorSymbolSum d(Q, 1, 3);
  d.add_term(2, {S("1 + t", 3)});
  CHECK(k1_normal_form(d) == S("1 + 2*t + t^2", 3));
}

TEST_CASE("semi-decided equality") {
  // Steinberg tuples rewrite to zero
  MilnorSymbolSum st(Q, 2, 3);
  st.add_term(1, {S("2", 3), S("-1", 3)}); // 2 + (-1) = 1
  MilnorSymbolSum zero(Q, 2, 3);
  CHECK(symbols_equal_semidecide(st, zero) == SymbolComparison::equal);

  // anticommutativity
  MilnorSymbolSum ab(Q, 2, 3);
  ab.add_term(1, {S("2", 3), S("3 + t", 3)});
  ab.add_term(1, {S("3 + t", 3), S("2", 3)});
  CHECK(symbols_equal_semidecide(ab, zero) == SymbolComparison::equal);

  // inverse pairs {x, -x}
  MilnorSymbolSum inv(Q, 2, 3);
  inv.add_term(1, {S("2 + t", 3), S("-2 - t", 3)});
  CHECK(symbols_equal_semidecide(inv, zero) == SymbolComparison::equal);

  // genuinely different-looking symbols stay undecided, never unequal
  MilnorSymbolSum x(Q, 2, 3);
  x.add_term(1, {S("2", 3), S("5", 3)});
  CHECK(symbols_equal_semidecide(x, zero) == SymbolComparison::undecided);

  // n = 1 decides through the normal form
  MilnorSymbolSum u(Q, 1, 3);
  u.add_term(1, {S("2", 3)});
  u.add_term(1, {S("3", 3)});
  MilnorSymbolSum v(Q, 1, 3);
  v.add_term(1, {S("6", 3)});
  CHECK(symbols_equal_semidecide(u, v) == SymbolComparison::equal);
}

TEST_CASE("push_graph with tautological coordinates is the identity") {
  std::size_t N = 8;
  TriangularCycle B_spec;
  B_spec.field = Q;
  B_spec.n = 1;
  B_spec.precision = N;
  B_spec.polys = {parse_poly("y1^2 - (1+t)", Q, 1, N)};
  validate(B_spec);

  FiniteAlgebra B(Q, N, B_spec.polys);
  AlgebraElement y = B.reduce(parse_poly("y1", Q, 1, N));
  TriangularCycle C = push_graph(B_spec, {y});
  CHECK(C.polys == B_spec.polys);
  CHECK(C.multiplicity == 1);
}

TEST_CASE("push_graph shifts a quadratic relation") {
  std::size_t N = 8;
  TriangularCycle B_spec;
  B_spec.field = Q;
  B_spec.n = 1;
  B_spec.precision = N;
  B_spec.polys = {parse_poly("y1^2 - (1+t)", Q, 1, N)};
  FiniteAlgebra B(Q, N, B_spec.polys);

  AlgebraElement b = B.reduce(parse_poly("y1 + 4", Q, 1, N));
  TriangularCycle C = push_graph(B_spec, {b});
  CHECK(C.polys[0] == parse_poly("y1^2 - 8*y1 + 15 - t", Q, 1, N));
  CHECK(C.multiplicity == 1);

  // and the repeated coordinate generates nothing new at level 2
  AlgebraElement y = B.reduce(parse_poly("y1", Q, 1, N));
  TriangularCycle C2 = push_graph(B_spec, {y, y});
  CHECK(C2.polys[0] == parse_poly("y1^2 - (1+t)", Q, 2, N));
  CHECK(C2.polys[1] == parse_poly("y2 - y1", Q, 2, N));
  CHECK(C2.multiplicity == 1);
}

TEST_CASE("push_graph of collapsing coordinates carries multiplicity") {
  std::size_t N = 8;
  TriangularCycle B_spec;
  B_spec.field = Q;
  B_spec.n = 1;
  B_spec.precision = N;
  B_spec.polys = {parse_poly("y1^2 - (1+t)", Q, 1, N)};

  FiniteAlgebra B(Q, N, B_spec.polys);
  TriangularCycle C = push_graph(B_spec, {B.from_series(S("2", N)), B.from_series(S("3 + t", N))});
  CHECK(C.multiplicity == 2); // rank 2 over a rank-1 image
  CHECK(C.polys[0] == parse_poly("y1 - 2", Q, 2, N));
  CHECK(C.polys[1] == parse_poly("y2 - 3 - t", Q, 2, N));
}

TEST_CASE("push_graph rejects bad coordinates") {
  std::size_t N = 6;
  TriangularCycle B_spec;
  B_spec.field = Q;
  B_spec.n = 1;
  B_spec.precision = N;
  B_spec.polys = {parse_poly("y1^2 - (1+t)", Q, 1, N)};
  FiniteAlgebra B(Q, N, B_spec.polys);

  CHECK_THROWS_AS(push_graph(B_spec, {B.zero()}), error);
  CHECK_THROWS_AS(push_graph(B_spec, {B.one()}), error);
}

TEST_CASE("ev0 commutes with the regulator on graph cycles") {
  Gen g(50);
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t N = 8, m = 3;
    std::vector<TruncatedSeries> a{g.coordinate(Q, N), g.coordinate(Q, N)};
    auto [sym, trace] = regulator(graph_cycle(a), m);
    MilnorSymbolSum expected(Q, 2, 1);
    expected.add_term(1, {reduce_precision(a[0], 1), reduce_precision(a[1], 1)});
    CHECK(ev0(sym) == expected);
  }
}

TEST_CASE("symbol documents round-trip through JSON") {
  MilnorSymbolSum s(Q, 2, 3);
  s.add_term(1, {parse_series("1 + t", Q, 3), parse_series("2", Q, 3)});
  s.add_term(-2, {parse_series("3", Q, 3), parse_series("5 + t^2", Q, 3)});
  json j = symbol_to_json(s);
  CHECK(j["n"] == 2);
  CHECK(j["m"] == 3);
  CHECK(symbol_from_json(j, Q) == s);
}

TEST_CASE("K_1 consistency over formal sums of cycles") {
  Gen g(51);
  std::size_t N = 8, m = 3;
  for (int rep = 0; rep < 15; ++rep) {
    TriangularCycle C1 = g.admissible_univariate(Q, N, 2);
    TriangularCycle C2 = g.admissible_univariate(Q, N, 3);
    auto [s1, t1] = regulator(C1, m);
    auto [s2, t2] = regulator(C2, m);
    CHECK(k1_normal_form(s1 + s2) == k1_normal_form(s1) * k1_normal_form(s2));
  }
}
