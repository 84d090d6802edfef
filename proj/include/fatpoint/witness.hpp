#ifndef FATPOINT_WITNESS_HPP
#define FATPOINT_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fatpoint/mpoly.hpp"

namespace fatpoint {

/// An implicitized parametric cycle in cubical variables, used to witness
/// the Steinberg and product relations at the cycle level.
struct WitnessSystem {
  FieldSpec field;
  std::size_t precision = 0;
  int nvars = 0;
  std::vector<MultiPoly> polys;
};

struct WitnessFace {
  int var = 1; // 1-based cubical variable
  Face eps = Face::zero;
  int sign = 0; // contribution sign in the cubical boundary, when nonempty
  bool empty = true;
  std::string reason; // set when empty
  std::vector<TruncatedSeries> graph_coords; // set when the face is a graph
};

struct WitnessResult {
  WitnessSystem system;
  std::vector<WitnessFace> faces;
};

/// Faces of a witness system recomputed from scratch: per-variable
/// substitution or leading coefficients, then resolution of the resulting
/// linear system. Loud ShapeMismatch when a face does not resolve.
std::vector<WitnessFace> recompute_faces(const WitnessSystem& system);

/// The curve x -> (x, 1-x, (a-x)/(1-x), tail...): its only nonzero face is
/// del_3^0 = Gamma_(a, 1-a, tail). Needs a and 1-a to be units;
/// ExcludedValue when a = 1 mod t.
WitnessResult steinberg_witness(const TruncatedSeries& a,
                                const std::vector<TruncatedSeries>& tail);

/// The curve x -> (x, (a x - a b)/(x - a b), tail...): nonzero faces
/// del_1^inf = Gamma_a, del_2^0 = Gamma_b, del_2^inf = Gamma_ab.
/// ExcludedValue when a, b or ab equals 1 at working precision.
WitnessResult product_witness(const TruncatedSeries& a, const TruncatedSeries& b,
                              const std::vector<TruncatedSeries>& tail);

} // namespace fatpoint

#endif
