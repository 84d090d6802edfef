#ifndef FATPOINT_CYCLES_HPP
#define FATPOINT_CYCLES_HPP

#include <string>
#include <vector>

#include "fatpoint/mpoly.hpp"

namespace fatpoint {

/// An admissible triangular cycle: P_i monic in y_i with degree-reduced
/// coefficients, unit constant terms along the tower, and a nonzero value at
/// the excluded divisor y_i = 1. Integral cycles carry multiplicity 1.
struct TriangularCycle {
  FieldSpec field;
  int n = 0;
  std::size_t precision = 0;
  std::vector<MultiPoly> polys; // P_i involves y_1..y_i; stored over nvars = n
  long long multiplicity = 1;

  bool operator==(const TriangularCycle& o) const;
};

struct FaceStatus {
  int var = 0; // 1-based
  Face eps = Face::zero;
  bool empty = true;
  std::string note;
};

struct FaceReport {
  std::vector<FaceStatus> faces;

  bool all_empty() const;
};

/// Checks monicity, degree bounds, unit constant terms (by norms along the
/// tower) and the avoid-1 condition; reports per-face emptiness. Passing is
/// the definition-in-code of admissibility. Throws ValidationFailure at the
/// first violated condition.
FaceReport validate(const TriangularCycle& C);

/// The graph cycle {y_i = a_i} of a tuple of units. ExcludedValue when some
/// a_i equals 1 at working precision.
TriangularCycle graph_cycle(const std::vector<TruncatedSeries>& a);

/// Monic scaling plus iterated reduction of coefficients below the degree
/// bounds. Validation is not implied.
TriangularCycle normalize_cycle(std::vector<MultiPoly> gens, const FieldSpec& f,
                                std::size_t precision);

std::vector<int> degree_vector(const TriangularCycle& C);

/// True iff the cycle is a graph cycle up to multiplicity, i.e. the degree
/// vector is all ones; the coordinates are then the constant terms.
bool is_graph(const TriangularCycle& C);
/// Coordinates a_i of a degree-vector-all-ones cycle.
std::vector<TruncatedSeries> graph_coordinates(const TriangularCycle& C);

/// Equality of the canonical presentations after truncation mod t^m,
/// multiplicities included. PrecisionRequest when either side stores less
/// than m.
bool mod_I_equivalent(const TriangularCycle& C1, const TriangularCycle& C2, std::size_t m);

} // namespace fatpoint

#endif
