#include "fatpoint/milnor.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace fatpoint {

MilnorSymbolSum::MilnorSymbolSum(const FieldSpec& f, int n, std::size_t m)
    : field_(f), n_(n), m_(m) {
  if (n < 1) throw error(errc::shape_mismatch, "symbol weight must be at least 1");
  if (m < 1) throw error(errc::precision_request, "symbol precision must be at least 1");
}

MilnorSymbolSum MilnorSymbolSum::single(long long coeff,
                                        const std::vector<TruncatedSeries>& entries) {
  if (entries.empty()) throw error(errc::shape_mismatch, "empty symbol");
  MilnorSymbolSum s(entries[0].spec(), static_cast<int>(entries.size()), entries[0].precision());
  s.add_term(coeff, entries);
  return s;
}

void MilnorSymbolSum::add_term(long long coeff, std::vector<TruncatedSeries> entries) {
  if (static_cast<int>(entries.size()) != n_)
    throw error(errc::shape_mismatch, "symbol arity mismatch");
  for (auto& e : entries) {
    if (!(e.spec() == field_)) throw error(errc::mixed_fields, "entry over a different field");
    if (e.precision() < m_)
      throw error(errc::precision_request, "entry stored below the symbol precision");
    e = reduce_precision(e, m_);
    if (!e.is_unit()) throw error(errc::not_a_unit, "symbol entry is not a unit");
  }
  terms_.push_back(SymbolTerm{coeff, std::move(entries)});
  normalize();
}

namespace {

std::string entry_key(const std::vector<TruncatedSeries>& es) {
  std::string k;
  for (const auto& e : es) {
    k += e.str();
    k += '|';
  }
  return k;
}

} // namespace

void MilnorSymbolSum::normalize() {
  std::map<std::string, SymbolTerm> merged;
  for (auto& t : terms_) {
    if (t.coeff == 0) continue;
    bool degenerate = std::any_of(t.entries.begin(), t.entries.end(),
                                  [](const TruncatedSeries& e) { return e.is_one(); });
    if (degenerate) continue;
    std::string k = entry_key(t.entries);
    auto it = merged.find(k);
    if (it == merged.end())
      merged.emplace(k, t);
    else
      it->second.coeff += t.coeff;
  }
  terms_.clear();
  for (auto& [k, t] : merged)
    if (t.coeff != 0) terms_.push_back(std::move(t));
}

MilnorSymbolSum MilnorSymbolSum::operator+(const MilnorSymbolSum& o) const {
  if (!(field_ == o.field_) || n_ != o.n_ || m_ != o.m_)
    throw error(errc::shape_mismatch, "symbol sums with different shapes");
  MilnorSymbolSum r = *this;
  for (const auto& t : o.terms_) r.terms_.push_back(t);
  r.normalize();
  return r;
}

MilnorSymbolSum MilnorSymbolSum::operator-(const MilnorSymbolSum& o) const {
  return *this + (o * -1);
}

MilnorSymbolSum MilnorSymbolSum::operator*(long long k) const {
  MilnorSymbolSum r = *this;
  for (auto& t : r.terms_) t.coeff *= k;
  r.normalize();
  return r;
}

bool MilnorSymbolSum::operator==(const MilnorSymbolSum& o) const {
  if (!(field_ == o.field_) || n_ != o.n_ || m_ != o.m_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff) return false;
    if (terms_[i].entries != o.terms_[i].entries) return false;
  }
  return true;
}

MilnorSymbolSum ev0(const MilnorSymbolSum& s) {
  MilnorSymbolSum r(s.spec(), s.n(), 1);
  for (const auto& t : s.terms()) {
    std::vector<TruncatedSeries> es;
    es.reserve(t.entries.size());
    for (const auto& e : t.entries) es.push_back(reduce_precision(e, 1));
    r.add_term(t.coeff, std::move(es)); // 1-entries drop in normalization
  }
  return r;
}

std::pair<FieldElement, TruncatedSeries> relative_split(const MilnorSymbolSum& s) {
  if (s.n() != 1)
    throw error(errc::unsupported, "exact relative splitting is only decided at n = 1");
  FieldElement c = FieldElement::one(s.spec());
  TruncatedSeries u = TruncatedSeries::from_int(s.spec(), 1, s.m());
  for (const auto& t : s.terms()) {
    const TruncatedSeries& a = t.entries[0];
    FieldElement a0 = a.coeff(0);
    TruncatedSeries rel = a * TruncatedSeries::constant(s.spec(), a0.inverse(), s.m());
    FieldElement cpart = t.coeff >= 0 ? a0 : a0.inverse();
    TruncatedSeries upart = t.coeff >= 0 ? rel : invert(rel);
    long long reps = t.coeff < 0 ? -t.coeff : t.coeff;
    for (long long k = 0; k < reps; ++k) {
      c = c * cpart;
      u = u * upart;
    }
  }
  return {c, u};
}

TruncatedSeries k1_normal_form(const MilnorSymbolSum& s) {
  if (s.n() != 1) throw error(errc::unsupported, "K_1 normal form needs n = 1");
  TruncatedSeries r = TruncatedSeries::from_int(s.spec(), 1, s.m());
  for (const auto& t : s.terms()) r = r * pow(t.entries[0], t.coeff);
  return r;
}

namespace {

// Moves valid in Milnor K-theory of the local ring k_m: degenerate tuples
// and the pairs {x, 1-x}, {x, -x} vanish; transpositions flip the sign.
bool rewrites_to_zero(const std::vector<TruncatedSeries>& es) {
  TruncatedSeries one = TruncatedSeries::from_int(es[0].spec(), 1, es[0].precision());
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].is_one()) return true;
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i] + es[j] == one) return true;
      if ((es[i] + es[j]).is_zero()) return true;
    }
  }
  return false;
}

} // namespace

SymbolComparison symbols_equal_semidecide(const MilnorSymbolSum& a, const MilnorSymbolSum& b) {
  if (a.n() != b.n() || a.m() != b.m() || !(a.spec() == b.spec()))
    return SymbolComparison::undecided;
  MilnorSymbolSum d = a - b;
  if (d.is_zero()) return SymbolComparison::equal;
  if (a.n() == 1)
    return k1_normal_form(d).is_one() ? SymbolComparison::equal : SymbolComparison::undecided;

  std::map<std::string, long long> acc;
  for (const auto& t : d.terms()) {
    if (rewrites_to_zero(t.entries)) continue;
    std::vector<std::string> keys;
    keys.reserve(t.entries.size());
    for (const auto& e : t.entries) keys.push_back(e.str());
    long long sign = 1;
    for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
      std::size_t best = i;
      for (std::size_t j = i + 1; j < keys.size(); ++j)
        if (keys[j] < keys[best]) best = j;
      if (best != i) {
        std::swap(keys[i], keys[best]);
        sign = -sign;
      }
    }
    std::string key;
    for (const auto& k : keys) key += k + "|";
    acc[key] += sign * t.coeff;
  }
  for (const auto& [k, c] : acc)
    if (c != 0) return SymbolComparison::undecided;
  return SymbolComparison::equal;
}

TriangularCycle push_graph(const TriangularCycle& B_spec, const std::vector<AlgebraElement>& beta) {
  if (beta.empty()) throw error(errc::shape_mismatch, "push_graph needs at least one coordinate");
  FiniteAlgebra B(B_spec.field, B_spec.precision, B_spec.polys);

  TruncatedSeries one = TruncatedSeries::from_int(B_spec.field, 1, B_spec.precision);
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (!B.is_unit(beta[j]))
      throw error(errc::not_a_unit, "coordinate " + std::to_string(j + 1) + " is not a unit");
    AlgebraElement shifted = B.sub(beta[j], B.from_series(one));
    if (B.is_zero(shifted))
      throw error(errc::excluded_value,
                  "coordinate " + std::to_string(j + 1) + " equals 1 at working precision");
  }

  Triangularization tr = triangularize_coordinates(B, beta);
  if (B.rank() % tr.image_rank != 0)
    throw error(errc::no_relation, "image rank does not divide the domain rank");

  TriangularCycle C;
  C.field = B_spec.field;
  C.n = static_cast<int>(beta.size());
  C.precision = B_spec.precision;
  C.polys = tr.polys;
  C.multiplicity = static_cast<long long>(B.rank() / tr.image_rank);
  validate(C);
  return C;
}

} // namespace fatpoint
