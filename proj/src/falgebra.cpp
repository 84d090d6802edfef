#include "fatpoint/falgebra.hpp"

#include <algorithm>

namespace fatpoint {

namespace {

// Dense k[t] polynomials (exact lifts of truncated series) for the
// fraction-free determinant path.
using PolyK = std::vector<FieldElement>;

void trim(PolyK& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

PolyK lift(const TruncatedSeries& s) {
  PolyK p;
  p.reserve(s.precision());
  for (std::size_t j = 0; j < s.precision(); ++j) p.push_back(s.coeff(j));
  trim(p);
  return p;
}

bool poly_zero(const PolyK& p) { return p.empty(); }

PolyK poly_sub(const PolyK& a, const PolyK& b, const FieldSpec& f) {
  PolyK r(std::max(a.size(), b.size()), FieldElement::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim(r);
  return r;
}

PolyK poly_mul(const PolyK& a, const PolyK& b, const FieldSpec& f) {
  if (a.empty() || b.empty()) return {};
  PolyK r(a.size() + b.size() - 1, FieldElement::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

// Exact division in k[t]; the remainder is known to vanish (Bareiss).
PolyK poly_exact_div(const PolyK& a, const PolyK& b, const FieldSpec& f) {
  if (poly_zero(a)) return {};
  if (poly_zero(b)) throw error(errc::division_by_zero, "exact division by zero polynomial");
  PolyK rem = a;
  PolyK q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, FieldElement::zero(f));
  FieldElement linv = b.back().inverse();
  while (rem.size() >= b.size() && !rem.empty()) {
    std::size_t sh = rem.size() - b.size();
    FieldElement c = rem.back() * linv;
    q[sh] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[sh + j] = rem[sh + j] - c * b[j];
    trim(rem);
  }
  if (!poly_zero(rem))
    throw error(errc::division_by_zero, "inexact division in determinant elimination");
  trim(q);
  return q;
}

TruncatedSeries truncate(const PolyK& p, const FieldSpec& f, std::size_t prec) {
  TruncatedSeries s(f, prec);
  for (std::size_t j = 0; j < p.size() && j < prec; ++j) s.set_coeff(j, p[j]);
  return s;
}

} // namespace

TruncatedSeries det_series(const SeriesMatrix& M, const FieldSpec& f, std::size_t prec) {
  if (M.rows != M.cols) throw error(errc::shape_mismatch, "determinant of a non-square matrix");
  std::size_t r = M.rows;
  if (r == 0) return TruncatedSeries::from_int(f, 1, prec);

  std::vector<std::vector<PolyK>> m(r, std::vector<PolyK>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m[i][j] = lift(M.at(i, j));

  int sign = 1;
  PolyK prev{FieldElement::one(f)};
  for (std::size_t k = 0; k + 1 < r; ++k) {
    if (poly_zero(m[k][k])) {
      std::size_t swap_row = k;
      for (std::size_t i = k + 1; i < r; ++i)
        if (!poly_zero(m[i][k])) { swap_row = i; break; }
      if (swap_row == k) return TruncatedSeries(f, prec); // zero column, det 0
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < r; ++j) {
        PolyK num = poly_sub(poly_mul(m[k][k], m[i][j], f), poly_mul(m[i][k], m[k][j], f), f);
        m[i][j] = poly_exact_div(num, prev, f);
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  PolyK det = m[r - 1][r - 1];
  if (sign < 0)
    for (auto& c : det) c = -c;
  return truncate(det, f, prec);
}

namespace {

// a / p where p = t^v * unit and val(a) >= v; the top v coefficients of the
// quotient are beyond the caller's remaining precision.
std::optional<TruncatedSeries> divide_tracking(const TruncatedSeries& a, const TruncatedSeries& p,
                                               std::size_t remaining) {
  Valuation vp = valuation(p);
  Valuation va = valuation(a);
  if (va.precision_limited) return TruncatedSeries(a.spec(), a.precision()); // 0 / p
  if (va.value < vp.value) return std::nullopt;                              // not divisible
  std::size_t n = a.precision();
  TruncatedSeries as(a.spec(), n), ps(a.spec(), n);
  for (std::size_t j = vp.value; j < n; ++j) {
    ps.set_coeff(j - vp.value, p.coeff(j));
    as.set_coeff(j - vp.value, a.coeff(j));
  }
  (void)remaining;
  return as * invert(ps);
}

bool zero_below(const TruncatedSeries& s, std::size_t bound) {
  for (std::size_t j = 0; j < std::min(bound, s.precision()); ++j)
    if (!s.coeff(j).is_zero()) return false;
  return true;
}

} // namespace

DvrSolveResult dvr_solve(const SeriesMatrix& A, const std::vector<TruncatedSeries>& b,
                         const FieldSpec& f, std::size_t prec) {
  std::size_t rows = A.rows, cols = A.cols;
  if (b.size() != rows) throw error(errc::shape_mismatch, "rhs length mismatch");

  SeriesMatrix m = A;
  std::vector<TruncatedSeries> rhs = b;
  std::size_t remaining = prec;
  std::size_t consumed = 0;

  std::vector<long> pivot_row_of_col(cols, -1);
  std::size_t rank = 0;

  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    // minimal-valuation pivot
    std::size_t best = rows;
    Valuation bestv{remaining, true};
    bool any_nonzero = false;
    for (std::size_t i = rank; i < rows; ++i) {
      Valuation v = valuation(m.at(i, col));
      if (!v.precision_limited) any_nonzero = true;
      if (!v.precision_limited && v.value < remaining &&
          (bestv.precision_limited || v.value < bestv.value)) {
        best = i;
        bestv = v;
      }
    }
    if (best == rows) {
      if (any_nonzero)
        throw error(errc::precision_exhausted,
                    "every candidate pivot has valuation at or beyond the remaining precision");
      continue; // exactly-zero column: free variable
    }
    if (best != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(best, j));
      std::swap(rhs[rank], rhs[best]);
    }
    if (bestv.value > 0) {
      if (bestv.value >= remaining)
        throw error(errc::precision_exhausted, "pivot valuation exhausts the remaining precision");
      consumed += bestv.value;
      remaining -= bestv.value;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      auto q = divide_tracking(m.at(i, col), m.at(rank, col), remaining);
      if (!q) {
        // entry with smaller valuation than the pivot cannot occur
        throw error(errc::precision_exhausted, "pivoting lost the minimal valuation");
      }
      if (q->is_zero()) continue;
      for (std::size_t j = col; j < cols; ++j)
        m.at(i, j) = m.at(i, j) - *q * m.at(rank, j);
      rhs[i] = rhs[i] - *q * rhs[rank];
    }
    pivot_row_of_col[col] = static_cast<long>(rank);
    ++rank;
  }

  DvrSolveResult res;
  res.consumed = consumed;

  // consistency of the eliminated rows at the remaining precision
  for (std::size_t i = rank; i < rows; ++i)
    if (!zero_below(rhs[i], remaining)) return res; // inconsistent

  // back-substitution
  std::vector<TruncatedSeries> x(cols, TruncatedSeries(f, prec));
  for (std::size_t col = cols; col-- > 0;) {
    long pr = pivot_row_of_col[col];
    if (pr < 0) continue; // free variable, zero
    TruncatedSeries acc = rhs[static_cast<std::size_t>(pr)];
    for (std::size_t j = col + 1; j < cols; ++j)
      acc = acc - m.at(static_cast<std::size_t>(pr), j) * x[j];
    auto q = divide_tracking(acc, m.at(static_cast<std::size_t>(pr), col), remaining);
    if (!q) {
      if (zero_below(acc, remaining)) {
        x[col] = TruncatedSeries(f, prec);
        continue;
      }
      return res; // not divisible: no solution over the DVR
    }
    x[col] = *q;
  }
  res.consistent = true;
  res.x = std::move(x);
  return res;
}

FiniteAlgebra::FiniteAlgebra(const FieldSpec& f, std::size_t prec, std::vector<MultiPoly> gens)
    : field_(f), prec_(prec), level_(static_cast<int>(gens.size())), gens_(std::move(gens)) {
  degs_.reserve(gens_.size());
  for (int i = 0; i < level_; ++i) {
    const MultiPoly& p = gens_[static_cast<std::size_t>(i)];
    if (p.nvars() < level_) gens_[static_cast<std::size_t>(i)] = p.with_nvars(level_);
    const MultiPoly& pi = gens_[static_cast<std::size_t>(i)];
    if (!pi.vars_below(i + 1))
      throw error(errc::shape_mismatch,
                  "generator " + std::to_string(i + 1) + " involves a later variable");
    int d = pi.degree_in(i);
    if (d < 1)
      throw error(errc::shape_mismatch,
                  "generator " + std::to_string(i + 1) + " has degree 0 in its own variable");
    MultiPoly lead = pi.coeff_of(i, d);
    if (!lead.is_constant() || !lead.constant_term().is_one())
      throw error(errc::not_monic, "generator " + std::to_string(i + 1) + " is not monic");
    degs_.push_back(d);
    rank_ *= static_cast<std::size_t>(d);
  }
  // mixed-radix enumeration, first variable fastest
  basis_.reserve(rank_);
  ExpVec e(static_cast<std::size_t>(level_), 0);
  for (std::size_t k = 0; k < rank_; ++k) {
    basis_.push_back(e);
    for (int j = 0; j < level_; ++j) {
      if (++e[static_cast<std::size_t>(j)] < degs_[static_cast<std::size_t>(j)]) break;
      e[static_cast<std::size_t>(j)] = 0;
    }
  }
}

AlgebraElement FiniteAlgebra::reduce(const MultiPoly& f) const {
  if (!(f.spec() == field_)) throw error(errc::mixed_fields, "element over a different field");
  MultiPoly r = f.nvars() == level_ ? f : f.with_nvars(level_);
  if (!r.vars_below(level_))
    throw error(errc::shape_mismatch, "element involves a variable outside the algebra");
  r = r.at_precision(std::min(prec_, r.precision()));
  for (int i = level_; i-- > 0;) {
    if (r.degree_in(i) >= degs_[static_cast<std::size_t>(i)])
      r = divide_monic(r, gens_[static_cast<std::size_t>(i)], i).second;
  }
  AlgebraElement u;
  u.coords.assign(rank_, TruncatedSeries(field_, prec_));
  for (const auto& [e, c] : r.terms()) {
    std::size_t idx = 0, stride = 1;
    for (int j = 0; j < level_; ++j) {
      idx += static_cast<std::size_t>(e[static_cast<std::size_t>(j)]) * stride;
      stride *= static_cast<std::size_t>(degs_[static_cast<std::size_t>(j)]);
    }
    TruncatedSeries cc = c.precision() == prec_ ? c : reduce_precision(c, prec_);
    u.coords[idx] = cc;
  }
  return u;
}

MultiPoly FiniteAlgebra::to_poly(const AlgebraElement& u) const {
  check_element(u);
  MultiPoly p(field_, level_, prec_);
  for (std::size_t k = 0; k < rank_; ++k)
    if (!u.coords[k].is_zero()) p.add_term(basis_[k], u.coords[k]);
  return p;
}

AlgebraElement FiniteAlgebra::zero() const {
  AlgebraElement u;
  u.coords.assign(rank_, TruncatedSeries(field_, prec_));
  return u;
}

AlgebraElement FiniteAlgebra::one() const { return from_series(TruncatedSeries::from_int(field_, 1, prec_)); }

AlgebraElement FiniteAlgebra::from_series(const TruncatedSeries& c) const {
  AlgebraElement u = zero();
  u.coords[0] = c.precision() == prec_ ? c : reduce_precision(c, prec_);
  return u;
}

void FiniteAlgebra::check_element(const AlgebraElement& u) const {
  if (u.coords.size() != rank_)
    throw error(errc::shape_mismatch, "element does not belong to this algebra");
}

AlgebraElement FiniteAlgebra::add(const AlgebraElement& u, const AlgebraElement& v) const {
  check_element(u);
  check_element(v);
  AlgebraElement w = u;
  for (std::size_t k = 0; k < rank_; ++k) w.coords[k] = w.coords[k] + v.coords[k];
  return w;
}

AlgebraElement FiniteAlgebra::sub(const AlgebraElement& u, const AlgebraElement& v) const {
  check_element(u);
  check_element(v);
  AlgebraElement w = u;
  for (std::size_t k = 0; k < rank_; ++k) w.coords[k] = w.coords[k] - v.coords[k];
  return w;
}

AlgebraElement FiniteAlgebra::mul(const AlgebraElement& u, const AlgebraElement& v) const {
  return reduce(to_poly(u) * to_poly(v));
}

bool FiniteAlgebra::is_zero(const AlgebraElement& u) const {
  check_element(u);
  return std::all_of(u.coords.begin(), u.coords.end(),
                     [](const TruncatedSeries& s) { return s.is_zero(); });
}

SeriesMatrix FiniteAlgebra::mult_matrix(const AlgebraElement& b) const {
  check_element(b);
  SeriesMatrix M(rank_, rank_, TruncatedSeries(field_, prec_));
  MultiPoly bp = to_poly(b);
  for (std::size_t k = 0; k < rank_; ++k) {
    MultiPoly col = bp * MultiPoly::monomial(TruncatedSeries::from_int(field_, 1, prec_), basis_[k]);
    AlgebraElement ck = reduce(col);
    for (std::size_t i = 0; i < rank_; ++i) M.at(i, k) = ck.coords[i];
  }
  return M;
}

TruncatedSeries FiniteAlgebra::norm(const AlgebraElement& b) const {
  return det_series(mult_matrix(b), field_, prec_);
}

bool FiniteAlgebra::is_unit(const AlgebraElement& b) const { return norm(b).is_unit(); }

MinimalPolyResult FiniteAlgebra::minimal_polynomial(const AlgebraElement& b,
                                                    const std::vector<AlgebraElement>& sub_basis) const {
  check_element(b);
  if (sub_basis.empty()) throw error(errc::shape_mismatch, "empty sub-basis");
  for (const auto& s : sub_basis) check_element(s);
  std::size_t s = sub_basis.size();
  std::size_t limit = rank_ / s;

  std::vector<AlgebraElement> powers{one()};
  for (int d = 1;; ++d) {
    if (static_cast<std::size_t>(d) > limit)
      throw error(errc::no_relation,
                  "no monic relation up to degree " + std::to_string(limit) +
                      " (rank ratio exceeded)");
    powers.push_back(mul(powers.back(), b));
    // columns: b^e * sigma_l for e < d, l < s
    SeriesMatrix A(rank_, static_cast<std::size_t>(d) * s, TruncatedSeries(field_, prec_));
    for (int e = 0; e < d; ++e)
      for (std::size_t l = 0; l < s; ++l) {
        AlgebraElement col = mul(powers[static_cast<std::size_t>(e)], sub_basis[l]);
        for (std::size_t i = 0; i < rank_; ++i)
          A.at(i, static_cast<std::size_t>(e) * s + l) = col.coords[i];
      }
    DvrSolveResult r = dvr_solve(A, powers.back().coords, field_, prec_);
    if (!r.consistent) continue;
    MinimalPolyResult out;
    out.degree = d;
    out.consumed = r.consumed;
    out.coeffs.assign(static_cast<std::size_t>(d), {});
    for (int e = 0; e < d; ++e) {
      out.coeffs[static_cast<std::size_t>(e)].reserve(s);
      for (std::size_t l = 0; l < s; ++l)
        out.coeffs[static_cast<std::size_t>(e)].push_back(r.x[static_cast<std::size_t>(e) * s + l]);
    }
    return out;
  }
}

Triangularization triangularize_coordinates(const FiniteAlgebra& A,
                                            const std::vector<AlgebraElement>& beta) {
  const FieldSpec& f = A.spec();
  std::size_t prec = A.precision();
  int n = static_cast<int>(beta.size());

  Triangularization out;
  std::vector<AlgebraElement> sub{A.one()};
  std::vector<ExpVec> labels{ExpVec(static_cast<std::size_t>(n), 0)};

  for (int j = 0; j < n; ++j) {
    MinimalPolyResult mp = A.minimal_polynomial(beta[static_cast<std::size_t>(j)], sub);
    out.consumed = std::max(out.consumed, mp.consumed);
    int d = mp.degree;

    MultiPoly P(f, n, prec);
    ExpVec top(static_cast<std::size_t>(n), 0);
    top[static_cast<std::size_t>(j)] = d;
    P.add_term(top, TruncatedSeries::from_int(f, 1, prec));
    for (int e = 0; e < d; ++e)
      for (std::size_t l = 0; l < sub.size(); ++l) {
        const TruncatedSeries& c = mp.coeffs[static_cast<std::size_t>(e)][l];
        if (c.is_zero()) continue;
        ExpVec mv = labels[l];
        mv[static_cast<std::size_t>(j)] = e;
        P.add_term(mv, -c);
      }
    out.polys.push_back(P);
    out.image_rank *= static_cast<std::size_t>(d);

    // extend the image-algebra basis by powers of the new coordinate
    std::vector<AlgebraElement> next_sub;
    std::vector<ExpVec> next_labels;
    AlgebraElement pw = A.one();
    for (int e = 0; e < d; ++e) {
      for (std::size_t l = 0; l < sub.size(); ++l) {
        next_sub.push_back(A.mul(sub[l], pw));
        ExpVec mv = labels[l];
        mv[static_cast<std::size_t>(j)] = e;
        next_labels.push_back(mv);
      }
      if (e + 1 < d) pw = A.mul(pw, beta[static_cast<std::size_t>(j)]);
    }
    sub = std::move(next_sub);
    labels = std::move(next_labels);
  }
  return out;
}

} // namespace fatpoint
