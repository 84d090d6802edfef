#include "fatpoint/cycles.hpp"

#include <algorithm>

#include "fatpoint/falgebra.hpp"

namespace fatpoint {

bool TriangularCycle::operator==(const TriangularCycle& o) const {
  return field == o.field && n == o.n && precision == o.precision &&
         multiplicity == o.multiplicity && polys == o.polys;
}

bool FaceReport::all_empty() const {
  return std::all_of(faces.begin(), faces.end(), [](const FaceStatus& f) { return f.empty; });
}

namespace {

[[noreturn]] void reject(const std::string& msg) { throw error(errc::validation_failure, msg); }

std::string pname(int i) { return "P" + std::to_string(i + 1); }

void check_shapes(const TriangularCycle& C) {
  if (C.n < 1) reject("cycle must have n >= 1");
  if (static_cast<int>(C.polys.size()) != C.n)
    reject("expected " + std::to_string(C.n) + " generators, got " + std::to_string(C.polys.size()));
  if (C.multiplicity < 1) reject("multiplicity must be a positive integer");
  for (int i = 0; i < C.n; ++i) {
    const MultiPoly& p = C.polys[static_cast<std::size_t>(i)];
    if (!(p.spec() == C.field)) reject(pname(i) + " is over a different field");
    if (p.precision() != C.precision) reject(pname(i) + " has a different precision");
    if (p.nvars() != C.n) reject(pname(i) + " has the wrong variable count");
    if (!p.vars_below(i + 1)) reject(pname(i) + " involves a variable above y" + std::to_string(i + 1));
  }
}

} // namespace

FaceReport validate(const TriangularCycle& C) {
  check_shapes(C);
  std::vector<int> d(static_cast<std::size_t>(C.n), 0);

  for (int i = 0; i < C.n; ++i) {
    const MultiPoly& p = C.polys[static_cast<std::size_t>(i)];
    int di = p.degree_in(i);
    if (di < 1) reject(pname(i) + " has degree 0 in y" + std::to_string(i + 1));
    MultiPoly lead = p.coeff_of(i, di);
    if (!lead.is_constant() || !lead.constant_term().is_one())
      reject(pname(i) + " is not monic in y" + std::to_string(i + 1));
    d[static_cast<std::size_t>(i)] = di;
    for (const auto& [e, c] : p.terms())
      for (int j = 0; j < i; ++j)
        if (e[static_cast<std::size_t>(j)] >= d[static_cast<std::size_t>(j)])
          reject(pname(i) + " violates the degree bound in y" + std::to_string(j + 1));
  }

  FaceReport report;
  std::vector<MultiPoly> prefix;
  for (int i = 0; i < C.n; ++i) {
    FiniteAlgebra R(C.field, C.precision, prefix);
    const MultiPoly& p = C.polys[static_cast<std::size_t>(i)];

    AlgebraElement c0 = R.reduce(face_at(p, i, Face::zero));
    if (!R.is_unit(c0)) reject("constant term of " + pname(i) + " is not a unit");

    MultiPoly one = MultiPoly::from_int(C.field, 1, C.n, C.precision);
    AlgebraElement v1 = R.reduce(substitute(p, i, one));
    if (R.is_zero(v1))
      reject(pname(i) + " vanishes at y" + std::to_string(i + 1) + " = 1 (excluded divisor)");

    report.faces.push_back({i + 1, Face::zero, true, "constant term is a unit"});
    report.faces.push_back({i + 1, Face::infinity, true, "monic in y" + std::to_string(i + 1)});
    prefix.push_back(p);
  }
  return report;
}

TriangularCycle graph_cycle(const std::vector<TruncatedSeries>& a) {
  if (a.empty()) throw error(errc::shape_mismatch, "graph cycle needs at least one coordinate");
  std::size_t prec = a[0].precision();
  for (const auto& s : a) prec = std::min(prec, s.precision());
  TriangularCycle C;
  C.field = a[0].spec();
  C.n = static_cast<int>(a.size());
  C.precision = prec;
  C.multiplicity = 1;
  for (int i = 0; i < C.n; ++i) {
    const TruncatedSeries& ai = a[static_cast<std::size_t>(i)];
    if (!(ai.spec() == C.field)) throw error(errc::mixed_fields, "coordinates over different fields");
    if (!ai.is_unit())
      throw error(errc::not_a_unit, "coordinate a" + std::to_string(i + 1) + " is not a unit");
    TruncatedSeries at = reduce_precision(ai, prec);
    if (at.is_one())
      throw error(errc::excluded_value,
                  "coordinate a" + std::to_string(i + 1) + " equals 1 at working precision");
    MultiPoly p = MultiPoly::variable(C.field, i, C.n, prec) - MultiPoly::from_series(at, C.n);
    C.polys.push_back(p);
  }
  validate(C);
  return C;
}

TriangularCycle normalize_cycle(std::vector<MultiPoly> gens, const FieldSpec& f,
                                std::size_t precision) {
  int n = static_cast<int>(gens.size());
  TriangularCycle C;
  C.field = f;
  C.n = n;
  C.precision = precision;
  C.multiplicity = 1;
  for (int i = 0; i < n; ++i) {
    MultiPoly p = gens[static_cast<std::size_t>(i)].with_nvars(n).at_precision(precision);
    if (!p.vars_below(i + 1))
      throw error(errc::shape_mismatch,
                  "generator " + std::to_string(i + 1) + " involves a variable above y" +
                      std::to_string(i + 1));
    int d = p.degree_in(i);
    if (d < 1)
      throw error(errc::shape_mismatch,
                  "generator " + std::to_string(i + 1) + " has degree 0 in its own variable");
    MultiPoly lead = p.coeff_of(i, d);
    if (!lead.is_constant())
      throw error(errc::not_monic, "leading y" + std::to_string(i + 1) + "-coefficient of generator " +
                                       std::to_string(i + 1) + " is not a constant series");
    TruncatedSeries lc = lead.constant_term();
    if (!lc.is_unit())
      throw error(errc::not_a_unit, "leading coefficient of generator " + std::to_string(i + 1) +
                                        " is not a unit");
    if (!lc.is_one()) p = p.scale(invert(lc));
    for (int j = i; j-- > 0;)
      p = divide_monic(p, C.polys[static_cast<std::size_t>(j)], j).second;
    C.polys.push_back(p);
  }
  return C;
}

std::vector<int> degree_vector(const TriangularCycle& C) {
  std::vector<int> d;
  d.reserve(C.polys.size());
  for (int i = 0; i < C.n; ++i) d.push_back(C.polys[static_cast<std::size_t>(i)].degree_in(i));
  return d;
}

bool is_graph(const TriangularCycle& C) {
  std::vector<int> d = degree_vector(C);
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 1; });
}

std::vector<TruncatedSeries> graph_coordinates(const TriangularCycle& C) {
  if (!is_graph(C))
    throw error(errc::shape_mismatch, "degree vector is not all ones");
  std::vector<TruncatedSeries> a;
  a.reserve(C.polys.size());
  for (int i = 0; i < C.n; ++i) {
    // P_i = y_i - a_i with a_i constant by the degree bounds
    MultiPoly rest = C.polys[static_cast<std::size_t>(i)] -
                     MultiPoly::variable(C.field, i, C.n, C.precision);
    if (!rest.is_constant())
      throw error(errc::shape_mismatch, "graph generator " + std::to_string(i + 1) +
                                            " has a non-constant coordinate");
    a.push_back(-rest.constant_term());
  }
  return a;
}

bool mod_I_equivalent(const TriangularCycle& C1, const TriangularCycle& C2, std::size_t m) {
  if (!(C1.field == C2.field) || C1.n != C2.n) return false;
  if (m > C1.precision || m > C2.precision)
    throw error(errc::precision_request, "cycles stored below the comparison precision");
  if (C1.multiplicity != C2.multiplicity) return false;
  for (int i = 0; i < C1.n; ++i)
    if (C1.polys[static_cast<std::size_t>(i)].at_precision(m) !=
        C2.polys[static_cast<std::size_t>(i)].at_precision(m))
      return false;
  return true;
}

} // namespace fatpoint
