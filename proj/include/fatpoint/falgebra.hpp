#ifndef FATPOINT_FALGEBRA_HPP
#define FATPOINT_FALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fatpoint/mpoly.hpp"

namespace fatpoint {

/// Coordinates of an algebra element over the monomial basis of its
/// FiniteAlgebra, in basis order.
struct AlgebraElement {
  std::vector<TruncatedSeries> coords;

  bool operator==(const AlgebraElement& o) const { return coords == o.coords; }
};

struct SeriesMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<TruncatedSeries> a;

  SeriesMatrix() = default;
  SeriesMatrix(std::size_t r, std::size_t c, const TruncatedSeries& fill)
      : rows(r), cols(c), a(r * c, fill) {}

  TruncatedSeries& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const TruncatedSeries& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Exact determinant over k[t]/(t^N): fraction-free Bareiss elimination on
/// degree-< N lifts in k[t], truncated at the end. No valuation loss.
TruncatedSeries det_series(const SeriesMatrix& M, const FieldSpec& f, std::size_t prec);

struct DvrSolveResult {
  bool consistent = false;
  std::vector<TruncatedSeries> x; // one per column when consistent
  std::size_t consumed = 0;       // t-adic precision spent on non-unit pivots
};

/// Solve A x = b over k[t]/(t^N) by Gaussian elimination with
/// minimal-valuation pivoting. Divides only after shifting out pivot
/// valuations and accounts the shift as consumed precision.
/// PrecisionExhausted when a needed pivot column is zero at the remaining
/// precision.
DvrSolveResult dvr_solve(const SeriesMatrix& A, const std::vector<TruncatedSeries>& b,
                         const FieldSpec& f, std::size_t prec);

struct MinimalPolyResult {
  int degree = 0;
  // coeffs[e][l]: coefficient of b^e * sub_basis[l], e < degree
  std::vector<std::vector<TruncatedSeries>> coeffs;
  std::size_t consumed = 0;
};

/// The finite free quotient k_N[y_1..y_level]/(P_1..P_level) of a monic
/// triangular system, with the monomial basis {y^a : a_j < deg_{y_j} P_j}.
class FiniteAlgebra {
public:
  FiniteAlgebra(const FieldSpec& f, std::size_t prec, std::vector<MultiPoly> gens);

  const FieldSpec& spec() const { return field_; }
  std::size_t precision() const { return prec_; }
  int level() const { return level_; }
  std::size_t rank() const { return rank_; }
  const std::vector<int>& degrees() const { return degs_; }
  const std::vector<ExpVec>& basis() const { return basis_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  /// Normal form modulo (P_1..P_level): iterated monic division from the
  /// top level down. Linear in f.
  AlgebraElement reduce(const MultiPoly& f) const;
  /// The unique degree-reduced polynomial representative.
  MultiPoly to_poly(const AlgebraElement& u) const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement from_series(const TruncatedSeries& c) const;

  AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) const;
  AlgebraElement sub(const AlgebraElement& u, const AlgebraElement& v) const;
  AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) const;

  bool is_zero(const AlgebraElement& u) const;

  /// Matrix of x -> b*x in the monomial basis.
  SeriesMatrix mult_matrix(const AlgebraElement& b) const;
  /// det(mult_matrix(b)) — the norm to k[t]/(t^N).
  TruncatedSeries norm(const AlgebraElement& b) const;
  /// b is a unit iff its norm is a unit of k[t]/(t^N).
  bool is_unit(const AlgebraElement& b) const;

  /// Least-degree monic relation of b over the span of sub_basis (a reduced
  /// monomial basis of a free subalgebra): solves b^d in the span of
  /// {b^e * sub_basis}, d increasing, with minimal-valuation pivoting.
  /// NoRelation past rank()/sub_basis.size(); PrecisionExhausted from the
  /// solver.
  MinimalPolyResult minimal_polynomial(const AlgebraElement& b,
                                       const std::vector<AlgebraElement>& sub_basis) const;

private:
  void check_element(const AlgebraElement& u) const;

  FieldSpec field_;
  std::size_t prec_ = 0;
  int level_ = 0;
  std::vector<MultiPoly> gens_;
  std::vector<int> degs_;
  std::size_t rank_ = 1;
  std::vector<ExpVec> basis_;
};

struct Triangularization {
  std::vector<MultiPoly> polys; // P_j in y_1..y_j over nvars = beta.size()
  std::size_t image_rank = 1;
  std::size_t consumed = 0;
};

/// Triangular presentation of the subalgebra generated by the coordinates
/// `beta`: successive minimal polynomials, coefficients rewritten over the
/// monomials in the new variables. The source multiplicity over the image
/// is rank(A)/image_rank.
Triangularization triangularize_coordinates(const FiniteAlgebra& A,
                                            const std::vector<AlgebraElement>& beta);

} // namespace fatpoint

#endif
