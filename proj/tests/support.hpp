#ifndef FATPOINT_TESTS_SUPPORT_HPP
#define FATPOINT_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "fatpoint/cycles.hpp"
#include "fatpoint/falgebra.hpp"
#include "fatpoint/milnor.hpp"

namespace fatpoint::testing {

struct Gen {
  std::mt19937_64 rng;

  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long long ll(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  }

  FieldElement element(const FieldSpec& f) {
    if (f.kind == FieldSpec::Kind::rationals)
      return FieldElement::fraction(f, ll(-9, 9), ll(1, 9));
    return FieldElement::from_int(f, ll(0, static_cast<long long>(f.p) - 1));
  }

  FieldElement nonzero_element(const FieldSpec& f) {
    for (;;) {
      FieldElement e = element(f);
      if (!e.is_zero()) return e;
    }
  }

  TruncatedSeries series(const FieldSpec& f, std::size_t prec) {
    TruncatedSeries s(f, prec);
    for (std::size_t j = 0; j < prec; ++j) s.set_coeff(j, element(f));
    return s;
  }

  TruncatedSeries unit_series(const FieldSpec& f, std::size_t prec) {
    TruncatedSeries s = series(f, prec);
    s.set_coeff(0, nonzero_element(f));
    if (s.is_one()) s.set_coeff(1, nonzero_element(f));
    return s;
  }

  /// A unit suitable as a graph coordinate: unit, not 1 at precision.
  TruncatedSeries coordinate(const FieldSpec& f, std::size_t prec) { return unit_series(f, prec); }

  /// A unit with unit 1-a as well (Steinberg-safe).
  TruncatedSeries steinberg_unit(const FieldSpec& f, std::size_t prec) {
    for (;;) {
      TruncatedSeries s = unit_series(f, prec);
      if ((TruncatedSeries::from_int(f, 1, prec) - s).is_unit()) return s;
    }
  }

  MultiPoly poly(const FieldSpec& f, int nvars, std::size_t prec, int maxdeg, int maxterms) {
    MultiPoly p(f, nvars, prec);
    int terms = static_cast<int>(ll(1, maxterms));
    for (int t = 0; t < terms; ++t) {
      ExpVec e(static_cast<std::size_t>(nvars), 0);
      for (int v = 0; v < nvars; ++v) e[static_cast<std::size_t>(v)] = static_cast<int>(ll(0, maxdeg));
      p.add_term(e, series(f, prec));
    }
    return p;
  }

  /// Random monic polynomial in y_var of the given degree, lower
  /// coefficients random in the earlier variables (bounded exponents).
  MultiPoly monic_in(const FieldSpec& f, int nvars, std::size_t prec, int var, int deg,
                     const std::vector<int>& bounds) {
    MultiPoly p(f, nvars, prec);
    ExpVec top(static_cast<std::size_t>(nvars), 0);
    top[static_cast<std::size_t>(var)] = deg;
    p.add_term(top, TruncatedSeries::from_int(f, 1, prec));
    for (int k = 0; k < deg; ++k) {
      int terms = static_cast<int>(ll(1, 2));
      for (int t = 0; t < terms; ++t) {
        ExpVec e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(var)] = k;
        for (int v = 0; v < var; ++v)
          e[static_cast<std::size_t>(v)] = static_cast<int>(ll(0, bounds[static_cast<std::size_t>(v)] - 1));
        p.add_term(e, series(f, prec));
      }
    }
    return p;
  }

  /// Admissible monic n=1 cycle of the given degree.
  TriangularCycle admissible_univariate(const FieldSpec& f, std::size_t prec, int deg) {
    for (;;) {
      MultiPoly p(f, 1, prec);
      p.add_term(ExpVec{deg}, TruncatedSeries::from_int(f, 1, prec));
      for (int k = 1; k < deg; ++k) p.add_term(ExpVec{k}, series(f, prec));
      p.add_term(ExpVec{0}, unit_series(f, prec));
      TriangularCycle C;
      C.field = f;
      C.n = 1;
      C.precision = prec;
      C.polys = {p};
      try {
        validate(C);
        // keep c != 1 so reduction cannot land on the excluded divisor
        TruncatedSeries c0 = face_at(p, 0, Face::zero).constant_term();
        TruncatedSeries c = deg % 2 == 0 ? c0 : -c0;
        if (c.is_one()) continue;
        return C;
      } catch (const error&) {
        continue;
      }
    }
  }

  /// Unit of B with unit b-1, for push_graph coordinates.
  AlgebraElement unit_coordinate(const FiniteAlgebra& B) {
    TruncatedSeries one = TruncatedSeries::from_int(B.spec(), 1, B.precision());
    for (;;) {
      AlgebraElement b;
      b.coords.reserve(B.rank());
      for (std::size_t k = 0; k < B.rank(); ++k) b.coords.push_back(series(B.spec(), B.precision()));
      if (!B.is_unit(b)) continue;
      AlgebraElement shifted = B.sub(b, B.from_series(one));
      if (!B.is_unit(shifted)) continue;
      return b;
    }
  }

  /// Unit coordinate whose top basis coefficient is a unit series, so the
  /// subalgebra it generates is the whole of B (a free power-basis tower).
  AlgebraElement generating_coordinate(const FiniteAlgebra& B) {
    for (;;) {
      AlgebraElement b = unit_coordinate(B);
      if (b.coords.back().is_unit()) return b;
    }
  }

  /// Admissible n=1 cycle whose mod-t reduction is a fixed irreducible
  /// polynomial of k, so the quotient is a genuine domain (deg 2 or 3).
  TriangularCycle domain_univariate(const FieldSpec& f, std::size_t prec, int deg) {
    MultiPoly p(f, 1, prec);
    p.add_term(ExpVec{deg}, TruncatedSeries::from_int(f, 1, prec));
    if (deg == 2) {
      // y^2 - s with s a non-square of k
      long long s = 2;
      if (f.kind == FieldSpec::Kind::prime_field) {
        auto is_sq = [&](long long v) {
          for (std::uint64_t x = 0; x < f.p; ++x)
            if (static_cast<long long>((x * x) % f.p) == v) return true;
          return false;
        };
        while (is_sq(s % static_cast<long long>(f.p))) ++s;
      }
      p.add_term(ExpVec{0}, TruncatedSeries::from_int(f, -s, prec));
    } else if (deg == 3) {
      // y^3 - y - c with no root in k
      long long c = 1;
      if (f.kind == FieldSpec::Kind::prime_field) {
        auto has_root = [&](long long v) {
          for (std::uint64_t x = 0; x < f.p; ++x) {
            long long lhs = static_cast<long long>((x * x % f.p) * x % f.p);
            long long rhs = (static_cast<long long>(x) + v) % static_cast<long long>(f.p);
            if (lhs == rhs) return true;
          }
          return false;
        };
        while (has_root(c % static_cast<long long>(f.p))) ++c;
      }
      p.add_term(ExpVec{1}, TruncatedSeries::from_int(f, -1, prec));
      p.add_term(ExpVec{0}, TruncatedSeries::from_int(f, -c, prec));
    } else {
      throw std::runtime_error("domain_univariate supports degree 2 or 3");
    }
    for (;;) {
      MultiPoly q = p;
      for (int k = 0; k < deg; ++k)
        q.add_term(ExpVec{k}, shift(series(f, prec), 1)); // t * random keeps the mod-t part
      TriangularCycle C;
      C.field = f;
      C.n = 1;
      C.precision = prec;
      C.polys = {q};
      try {
        validate(C);
        return C;
      } catch (const error&) {
        continue;
      }
    }
  }

  /// Random non-graph n-coordinate push of a rank-2 or rank-3 domain, with
  /// resampling until the image is a representable triangular cycle.
  TriangularCycle pushed_cycle(const FieldSpec& f, std::size_t prec, int domain_deg, int n) {
    for (;;) {
      TriangularCycle B_spec = domain_univariate(f, prec, domain_deg);
      FiniteAlgebra B(f, prec, B_spec.polys);
      std::vector<AlgebraElement> beta;
      beta.push_back(generating_coordinate(B));
      for (int j = 1; j < n; ++j) beta.push_back(unit_coordinate(B));
      try {
        TriangularCycle C = push_graph(B_spec, beta);
        if (degree_vector(C)[0] > 1) return C;
      } catch (const error&) {
        continue;
      }
    }
  }
};

} // namespace fatpoint::testing

#endif
