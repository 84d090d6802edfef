#include "fatpoint/witness.hpp"

#include <algorithm>

namespace fatpoint {

namespace {

// Resolve a face system by repeatedly extracting univariate-linear relations
// with unit leading coefficients. Outcomes: a unit constant in the ideal
// (empty face), a resolved coordinate equal to 1 (excluded divisor, empty),
// or a full graph.
WitnessFace classify(std::vector<MultiPoly> polys, const WitnessSystem& sys, int var, Face eps) {
  WitnessFace face;
  face.var = var + 1;
  face.eps = eps;
  face.sign = (eps == Face::infinity ? 1 : -1) * ((var + 1) % 2 == 0 ? 1 : -1);

  int nv = sys.nvars;
  std::vector<std::optional<TruncatedSeries>> resolved(static_cast<std::size_t>(nv));
  resolved[static_cast<std::size_t>(var)] = std::nullopt; // the face variable is gone

  std::vector<bool> alive(polys.size(), true);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (!alive[k]) continue;
      MultiPoly& p = polys[k];
      if (p.is_zero()) {
        alive[k] = false;
        continue;
      }
      if (p.is_constant()) {
        TruncatedSeries c = p.constant_term();
        if (c.is_unit()) {
          face.empty = true;
          face.reason = "the face ideal contains the unit " + c.str();
          return face;
        }
        throw error(errc::shape_mismatch,
                    "face system contains the non-unit constant " + c.str());
      }
      // look for a relation linear in a single variable with unit leading
      // constant coefficient
      int the_var = -1;
      for (int v = 0; v < nv; ++v) {
        int d = p.degree_in(v);
        if (d > 1) { the_var = -2; break; }
        if (d == 1) {
          if (the_var >= 0) { the_var = -2; break; }
          the_var = v;
        }
      }
      if (the_var < 0) continue;
      MultiPoly lead = p.coeff_of(the_var, 1);
      if (!lead.is_constant() || !lead.constant_term().is_unit()) continue;
      MultiPoly c0 = p.coeff_of(the_var, 0);
      if (!c0.is_constant()) continue;
      TruncatedSeries value = -(c0.constant_term() * invert(lead.constant_term()));
      resolved[static_cast<std::size_t>(the_var)] = value;
      if (value.is_one()) {
        face.empty = true;
        face.reason = "coordinate y" + std::to_string(the_var + 1) + " lands on the excluded divisor";
        return face;
      }
      alive[k] = false;
      for (std::size_t k2 = 0; k2 < polys.size(); ++k2)
        if (alive[k2])
          polys[k2] = substitute(polys[k2], the_var,
                                 MultiPoly::from_series(value, polys[k2].nvars()));
      progress = true;
    }
  }

  for (std::size_t k = 0; k < polys.size(); ++k)
    if (alive[k])
      throw error(errc::shape_mismatch, "face system did not resolve to a graph");

  face.empty = false;
  for (int v = 0; v < nv; ++v) {
    if (v == var) continue;
    if (!resolved[static_cast<std::size_t>(v)])
      throw error(errc::shape_mismatch, "face left coordinate y" + std::to_string(v + 1) + " free");
    face.graph_coords.push_back(*resolved[static_cast<std::size_t>(v)]);
  }
  return face;
}

} // namespace

std::vector<WitnessFace> recompute_faces(const WitnessSystem& sys) {
  std::vector<WitnessFace> faces;
  for (int v = 0; v < sys.nvars; ++v) {
    for (Face eps : {Face::zero, Face::infinity}) {
      std::vector<MultiPoly> sub;
      sub.reserve(sys.polys.size());
      for (const auto& p : sys.polys) sub.push_back(face_at(p, v, eps));
      faces.push_back(classify(std::move(sub), sys, v, eps));
    }
  }
  return faces;
}

namespace {

void check_unit_tail(const std::vector<TruncatedSeries>& tail) {
  for (std::size_t j = 0; j < tail.size(); ++j) {
    if (!tail[j].is_unit())
      throw error(errc::not_a_unit, "tail entry " + std::to_string(j + 1) + " is not a unit");
    if (tail[j].is_one())
      throw error(errc::excluded_value, "tail entry " + std::to_string(j + 1) + " equals 1");
  }
}

} // namespace

WitnessResult steinberg_witness(const TruncatedSeries& a,
                                const std::vector<TruncatedSeries>& tail) {
  const FieldSpec& f = a.spec();
  std::size_t prec = a.precision();
  if (!a.is_unit()) throw error(errc::not_a_unit, "a is not a unit");
  TruncatedSeries one = TruncatedSeries::from_int(f, 1, prec);
  TruncatedSeries oma = one - a;
  if (!oma.is_unit())
    throw error(errc::excluded_value, "1 - a is not a unit (a = 1 mod t)");
  check_unit_tail(tail);

  int n = static_cast<int>(tail.size()) + 2; // symbol weight
  int nv = n + 1;                            // cubical variables of the witness
  WitnessSystem sys{f, prec, nv, {}};

  MultiPoly y1 = MultiPoly::variable(f, 0, nv, prec);
  MultiPoly y2 = MultiPoly::variable(f, 1, nv, prec);
  MultiPoly y3 = MultiPoly::variable(f, 2, nv, prec);
  MultiPoly onep = MultiPoly::from_int(f, 1, nv, prec);
  MultiPoly ap = MultiPoly::from_series(a, nv);

  sys.polys.push_back(y2 - (onep - y1));          // y2 = 1 - x
  sys.polys.push_back(y3 * (onep - y1) - (ap - y1)); // y3 (1 - x) = a - x
  for (std::size_t j = 0; j < tail.size(); ++j)
    sys.polys.push_back(MultiPoly::variable(f, 3 + static_cast<int>(j), nv, prec) -
                        MultiPoly::from_series(tail[j], nv));

  WitnessResult res{sys, recompute_faces(sys)};

  // the only nonzero face must be del_3^0 = Gamma_(a, 1-a, tail)
  for (const auto& fc : res.faces) {
    bool expected_nonempty = fc.var == 3 && fc.eps == Face::zero;
    if (fc.empty == expected_nonempty)
      throw error(errc::shape_mismatch, "unexpected face table for the Steinberg witness");
  }
  return res;
}

WitnessResult product_witness(const TruncatedSeries& a, const TruncatedSeries& b,
                              const std::vector<TruncatedSeries>& tail) {
  const FieldSpec& f = a.spec();
  std::size_t prec = std::min(a.precision(), b.precision());
  if (!a.is_unit()) throw error(errc::not_a_unit, "a is not a unit");
  if (!b.is_unit()) throw error(errc::not_a_unit, "b is not a unit");
  TruncatedSeries aa = reduce_precision(a, prec);
  TruncatedSeries bb = reduce_precision(b, prec);
  TruncatedSeries ab = aa * bb;
  if (aa.is_one() || bb.is_one() || ab.is_one())
    throw error(errc::excluded_value, "one of a, b, ab equals 1 at working precision");
  check_unit_tail(tail);

  int n = static_cast<int>(tail.size()) + 1; // symbol weight
  int nv = n + 1;
  WitnessSystem sys{f, prec, nv, {}};

  MultiPoly y1 = MultiPoly::variable(f, 0, nv, prec);
  MultiPoly y2 = MultiPoly::variable(f, 1, nv, prec);
  MultiPoly ap = MultiPoly::from_series(aa, nv);
  MultiPoly abp = MultiPoly::from_series(ab, nv);
  MultiPoly bp = MultiPoly::from_series(bb, nv);

  // y2 (y1 - ab) = a (y1 - b)
  sys.polys.push_back(y2 * (y1 - abp) - ap * (y1 - bp));
  for (std::size_t j = 0; j < tail.size(); ++j)
    sys.polys.push_back(MultiPoly::variable(f, 2 + static_cast<int>(j), nv, prec) -
                        MultiPoly::from_series(tail[j], nv));

  WitnessResult res{sys, recompute_faces(sys)};

  for (const auto& fc : res.faces) {
    bool expected_nonempty = (fc.var == 1 && fc.eps == Face::infinity) ||
                             (fc.var == 2 && fc.eps == Face::zero) ||
                             (fc.var == 2 && fc.eps == Face::infinity);
    if (fc.empty == expected_nonempty)
      throw error(errc::shape_mismatch, "unexpected face table for the product witness");
  }
  return res;
}

} // namespace fatpoint
