#ifndef FATPOINT_MILNOR_HPP
#define FATPOINT_MILNOR_HPP

#include <utility>
#include <vector>

#include "fatpoint/cycles.hpp"
#include "fatpoint/falgebra.hpp"

namespace fatpoint {

/// One summand of a formal symbol sum: coeff * {entries}.
struct SymbolTerm {
  long long coeff = 0;
  std::vector<TruncatedSeries> entries; // n units of k[t]/(t^m)
};

/// A formal Z-combination of n-tuples of units of k_m. Construction
/// normalizes: degenerate tuples (an entry equal to 1) drop to 0, identical
/// tuples merge, zero coefficients vanish, terms sort canonically.
class MilnorSymbolSum {
public:
  MilnorSymbolSum(const FieldSpec& f, int n, std::size_t m);

  static MilnorSymbolSum single(long long coeff, const std::vector<TruncatedSeries>& entries);

  const FieldSpec& spec() const { return field_; }
  int n() const { return n_; }
  std::size_t m() const { return m_; }
  const std::vector<SymbolTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(long long coeff, std::vector<TruncatedSeries> entries);

  MilnorSymbolSum operator+(const MilnorSymbolSum& o) const;
  MilnorSymbolSum operator-(const MilnorSymbolSum& o) const;
  MilnorSymbolSum operator*(long long k) const;

  bool operator==(const MilnorSymbolSum& o) const;
  bool operator!=(const MilnorSymbolSum& o) const { return !(*this == o); }

private:
  void normalize();

  FieldSpec field_;
  int n_ = 1;
  std::size_t m_ = 1;
  std::vector<SymbolTerm> terms_;
};

/// Entries reduced mod t; symbols acquiring a 1-entry vanish.
MilnorSymbolSum ev0(const MilnorSymbolSum& s);

/// n = 1 only: each unit factors uniquely as a(0) * u with u in 1 + t*k_m.
/// Returns the k^x part and the 1 + t*(...) part of the whole sum.
std::pair<FieldElement, TruncatedSeries> relative_split(const MilnorSymbolSum& s);

/// n = 1 only: the product of entries^coeff in k_m^x, deciding equality in
/// K_1.
TruncatedSeries k1_normal_form(const MilnorSymbolSum& s);

enum class SymbolComparison { equal, undecided };

/// Semi-decision of equality: literal difference, the n = 1 normal form, and
/// bounded rewriting (degenerate drops, anticommutative sorting, Steinberg
/// and inverse pairs). Never reports inequality.
SymbolComparison symbols_equal_semidecide(const MilnorSymbolSum& a, const MilnorSymbolSum& b);

/// Test constructor for non-graph cycles: the triangular presentation of the
/// image of Spec(B) under coordinates beta, with multiplicity
/// rank(B)/rank(image algebra). B is given by a full triangular cycle.
TriangularCycle push_graph(const TriangularCycle& B_spec, const std::vector<AlgebraElement>& beta);

} // namespace fatpoint

#endif
