#include "fatpoint/mpoly.hpp"

#include <algorithm>

namespace fatpoint {

MultiPoly::MultiPoly(const FieldSpec& f, int nvars, std::size_t precision)
    : spec_(f), nvars_(nvars), prec_(precision) {
  if (precision == 0)
    throw error(errc::precision_request, "polynomial precision must be at least 1");
}

MultiPoly MultiPoly::from_series(const TruncatedSeries& c, int nvars) {
  MultiPoly p(c.spec(), nvars, c.precision());
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::from_int(const FieldSpec& f, long long n, int nvars, std::size_t precision) {
  return from_series(TruncatedSeries::from_int(f, n, precision), nvars);
}

MultiPoly MultiPoly::variable(const FieldSpec& f, int var, int nvars, std::size_t precision) {
  MultiPoly p(f, nvars, precision);
  ExpVec e(nvars, 0);
  e.at(var) = 1;
  p.add_term(e, TruncatedSeries::from_int(f, 1, precision));
  return p;
}

MultiPoly MultiPoly::monomial(const TruncatedSeries& c, const ExpVec& e) {
  MultiPoly p(c.spec(), static_cast<int>(e.size()), c.precision());
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const ExpVec& e, const TruncatedSeries& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw error(errc::shape_mismatch, "exponent vector length does not match nvars");
  TruncatedSeries cc = c.precision() == prec_ ? c : reduce_precision(c, prec_);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!cc.is_zero()) terms_.emplace(e, cc);
  } else {
    TruncatedSeries s = it->second + cc;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = s;
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!(spec_ == o.spec_))
    throw error(errc::mixed_fields, "polynomials over different fields");
  if (nvars_ != o.nvars_)
    throw error(errc::shape_mismatch, "polynomials with different variable counts");
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

bool MultiPoly::vars_below(int bound) const {
  for (const auto& [e, c] : terms_)
    for (int j = bound; j < nvars_; ++j)
      if (e[j] != 0) return false;
  return true;
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
  MultiPoly r(spec_, nvars_, prec_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) != k) continue;
    ExpVec e2 = e;
    e2[var] = 0;
    r.add_term(e2, c);
  }
  return r;
}

TruncatedSeries MultiPoly::constant_term() const {
  auto it = terms_.find(ExpVec(nvars_, 0));
  return it == terms_.end() ? TruncatedSeries(spec_, prec_) : it->second;
}

bool MultiPoly::is_constant() const {
  ExpVec zero(nvars_, 0);
  for (const auto& [e, c] : terms_)
    if (e != zero) return false;
  return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  std::size_t n = std::min(prec_, o.prec_);
  MultiPoly r(spec_, nvars_, n);
  for (const auto& [e, c] : terms_) r.add_term(e, reduce_precision(c, n));
  for (const auto& [e, c] : o.terms_) r.add_term(e, reduce_precision(c, n));
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(spec_, nvars_, prec_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  std::size_t n = std::min(prec_, o.prec_);
  MultiPoly r(spec_, nvars_, n);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      ExpVec e = e1;
      for (int j = 0; j < nvars_; ++j) e[j] += e2[j];
      r.add_term(e, reduce_precision(c1, n) * reduce_precision(c2, n));
    }
  }
  return r;
}

MultiPoly MultiPoly::scale(const TruncatedSeries& c) const {
  std::size_t n = std::min(prec_, c.precision());
  MultiPoly r(spec_, nvars_, n);
  for (const auto& [e, k] : terms_) r.add_term(e, reduce_precision(k, n) * reduce_precision(c, n));
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!(spec_ == o.spec_) || nvars_ != o.nvars_ || prec_ != o.prec_) return false;
  return terms_ == o.terms_;
}

MultiPoly MultiPoly::at_precision(std::size_t M) const {
  MultiPoly r(spec_, nvars_, M);
  for (const auto& [e, c] : terms_) r.add_term(e, reduce_precision(c, M));
  return r;
}

MultiPoly MultiPoly::with_nvars(int nvars) const {
  MultiPoly r(spec_, nvars, prec_);
  for (const auto& [e, c] : terms_) {
    ExpVec e2(nvars, 0);
    for (int j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (j >= nvars)
        throw error(errc::shape_mismatch, "cannot drop a used variable");
      e2[j] = e[j];
    }
    r.add_term(e2, c);
  }
  return r;
}

std::pair<MultiPoly, MultiPoly> divide_monic(const MultiPoly& f, const MultiPoly& g, int var) {
  if (!(f.spec() == g.spec()))
    throw error(errc::mixed_fields, "division over different fields");
  int dg = g.degree_in(var);
  if (dg < 0) throw error(errc::not_monic, "division by the zero polynomial");
  MultiPoly lead = g.coeff_of(var, dg);
  if (!lead.is_constant() || !lead.constant_term().is_one())
    throw error(errc::not_monic, "divisor is not monic in y" + std::to_string(var + 1));

  std::size_t n = std::min(f.precision(), g.precision());
  MultiPoly q(f.spec(), f.nvars(), n);
  MultiPoly r = f.at_precision(n);
  MultiPoly gg = g.at_precision(n).with_nvars(f.nvars());

  int dr = r.degree_in(var);
  while (dr >= dg) {
    // peel the top y_var-layer of r in one pass
    MultiPoly top = r.coeff_of(var, dr);
    ExpVec sh(f.nvars(), 0);
    sh[var] = dr - dg;
    MultiPoly piece = top * MultiPoly::monomial(TruncatedSeries::from_int(f.spec(), 1, n), sh);
    q = q + piece;
    r = r - piece * gg;
    int nd = r.degree_in(var);
    if (nd >= dr)
      throw error(errc::not_monic, "division failed to reduce the degree");
    dr = nd;
  }
  return {q, r};
}

MultiPoly substitute(const MultiPoly& f, int var, const MultiPoly& s) {
  if (!(f.spec() == s.spec()))
    throw error(errc::mixed_fields, "substitution over different fields");
  MultiPoly sv = s.with_nvars(f.nvars());
  if (!sv.vars_below(var))
    throw error(errc::shape_mismatch, "substitution value involves the replaced or a later variable");
  std::size_t n = std::min(f.precision(), s.precision());
  int d = f.degree_in(var);
  if (d <= 0) return f.at_precision(n);
  // Horner in y_var
  MultiPoly acc = f.coeff_of(var, d).at_precision(n);
  for (int k = d - 1; k >= 0; --k) acc = acc * sv.at_precision(n) + f.coeff_of(var, k).at_precision(n);
  return acc;
}

MultiPoly face_at(const MultiPoly& f, int var, Face eps) {
  if (eps == Face::zero) return f.coeff_of(var, 0);
  int d = f.degree_in(var);
  if (d <= 0) return f;
  return f.coeff_of(var, d);
}

Valuation gauss_valuation(const MultiPoly& f) {
  Valuation best{f.precision(), true};
  for (const auto& [e, c] : f.terms()) {
    Valuation v = valuation(c);
    if (!v.precision_limited && (best.precision_limited || v.value < best.value)) best = v;
  }
  return best;
}

std::string MultiPoly::str(bool last_var_aux) const {
  if (terms_.empty()) return "0";
  // print with the last variable most significant, descending
  std::vector<const std::pair<const ExpVec, TruncatedSeries>*> ordered;
  for (const auto& kv : terms_) ordered.push_back(&kv);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    const ExpVec& x = a->first;
    const ExpVec& y = b->first;
    for (std::size_t j = x.size(); j-- > 0;)
      if (x[j] != y[j]) return x[j] > y[j];
    return false;
  });
  std::string out;
  for (const auto* kv : ordered) {
    const ExpVec& e = kv->first;
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      std::string v = (last_var_aux && static_cast<int>(j) == nvars_ - 1)
                          ? "yp"
                          : "y" + std::to_string(j + 1);
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    std::string cs = kv->second.str();
    bool simple = cs.find(" + ") == std::string::npos && cs.find(" - ") == std::string::npos;
    bool neg = false;
    std::string coeff;
    if (mono.empty()) {
      coeff = simple ? cs : "(" + cs + ")";
      if (simple && !cs.empty() && cs[0] == '-') {
        neg = true;
        coeff = cs.substr(1);
      }
    } else if (kv->second.is_one()) {
      coeff = "";
    } else if (simple) {
      if (!cs.empty() && cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
      if (cs == "1")
        coeff = "";
      else
        coeff = cs;
    } else {
      coeff = "(" + cs + ")";
    }
    std::string term = coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

} // namespace fatpoint
