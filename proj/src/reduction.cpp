#include "fatpoint/reduction.hpp"

#include <algorithm>

#include "fatpoint/falgebra.hpp"

namespace fatpoint {

int schedule(const std::vector<int>& degree_vec) {
  for (std::size_t i = degree_vec.size(); i-- > 0;)
    if (degree_vec[i] > 1) return static_cast<int>(i) + 1;
  throw error(errc::all_ones, "degree vector is already all ones");
}

std::vector<int> schedule_trace(
    std::vector<int> degree_vec,
    const std::function<std::vector<int>(int, const std::vector<int>&)>& next, std::size_t cap) {
  std::vector<int> emitted;
  while (std::any_of(degree_vec.begin(), degree_vec.end(), [](int d) { return d > 1; })) {
    if (emitted.size() >= cap)
      throw error(errc::iteration_cap_exceeded,
                  "scheduler exceeded " + std::to_string(cap) + " steps");
    int i = schedule(degree_vec);
    emitted.push_back(i);
    degree_vec = next(i, degree_vec);
  }
  return emitted;
}

namespace {

MultiPoly one_poly(const FieldSpec& f, int nvars, std::size_t prec) {
  return MultiPoly::from_int(f, 1, nvars, prec);
}

// (y_i - 1)^{d-1} * (y_i - chat) over nvars = n+1 with the aux variable last.
MultiPoly infinity_face_product(const MultiPoly& chat_aux, int var, int d, const FieldSpec& f,
                                int nvars, std::size_t prec) {
  MultiPoly yi = MultiPoly::variable(f, var, nvars, prec);
  MultiPoly lin = yi - one_poly(f, nvars, prec);
  MultiPoly acc = one_poly(f, nvars, prec);
  for (int k = 0; k < d - 1; ++k) acc = acc * lin;
  return acc * (yi - chat_aux);
}

} // namespace

ReductionCertificate reduce_step(const TriangularCycle& C, int index) {
  validate(C);
  std::vector<int> d = degree_vector(C);
  int n = C.n;
  if (index < 1 || index > n)
    throw error(errc::schedule_violation, "step index out of range");
  for (int j = index; j < n; ++j)
    if (d[static_cast<std::size_t>(j)] != 1)
      throw error(errc::schedule_violation,
                  "degree above the step index is not 1 (d" + std::to_string(j + 1) + " = " +
                      std::to_string(d[static_cast<std::size_t>(j)]) + ")");

  int i = index - 1; // 0-based variable
  int di = d[static_cast<std::size_t>(i)];
  const FieldSpec& f = C.field;
  std::size_t prec = C.precision;

  std::vector<MultiPoly> prefix(C.polys.begin(), C.polys.begin() + i);
  FiniteAlgebra R(f, prec, prefix);

  // c^{(i)} = (-1)^{d_i} * constant term of Pbar_i, a unit of R
  const MultiPoly& Pi = C.polys[static_cast<std::size_t>(i)];
  AlgebraElement c = R.reduce(face_at(Pi, i, Face::zero));
  if (di % 2 != 0)
    for (auto& s : c.coords) s = -s;
  if (!R.is_unit(c))
    throw error(errc::not_a_unit, "c^(" + std::to_string(index) + ") is not a unit");
  MultiPoly chat = R.to_poly(c).with_nvars(n);
  if (chat == one_poly(f, n, prec))
    throw error(errc::excluded_value,
                "c^(" + std::to_string(index) + ") equals 1 at working precision");

  // certificate polynomial over y_1..y_n, y'
  MultiPoly Pi_aux = Pi.with_nvars(n + 1);
  MultiPoly chat_aux = chat.with_nvars(n + 1);
  MultiPoly yp = MultiPoly::variable(f, n, n + 1, prec);
  MultiPoly Q = Pi_aux - infinity_face_product(chat_aux, i, di, f, n + 1, prec) * yp;

  // substituted presentation: P_i -> y_i - chat, and y_i -> chat above i
  std::vector<MultiPoly> subst = prefix;
  subst.push_back(MultiPoly::variable(f, i, n, prec) - chat);
  for (int j = i + 1; j < n; ++j)
    subst.push_back(substitute(C.polys[static_cast<std::size_t>(j)], i, chat));

  FiniteAlgebra A_sub(f, prec, subst);
  std::vector<AlgebraElement> taut;
  taut.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    taut.push_back(A_sub.reduce(MultiPoly::variable(f, j, n, prec)));
  Triangularization tr = triangularize_coordinates(A_sub, taut);
  if (A_sub.rank() % tr.image_rank != 0)
    throw error(errc::no_relation, "retriangulated rank does not divide the substituted rank");
  long long e = static_cast<long long>(A_sub.rank() / tr.image_rank);

  ReductionCertificate cert;
  cert.index = index;
  cert.d = di;
  cert.chat = chat;
  cert.Q = Q;
  cert.before = C;
  cert.after.field = f;
  cert.after.n = n;
  cert.after.precision = prec;
  cert.after.polys = tr.polys;
  cert.after.multiplicity = C.multiplicity * e;
  cert.e = e;
  cert.consumed = tr.consumed;
  validate(cert.after);
  return cert;
}

std::pair<MilnorSymbolSum, ReductionTrace> regulator_with_schedule(
    const TriangularCycle& C, std::size_t m,
    const std::function<int(const std::vector<int>&)>& pick) {
  validate(C);
  if (C.precision < m)
    throw error(errc::precision_request, "cycle stored below the output precision");

  std::size_t cap = (static_cast<std::size_t>(1) << C.n) * static_cast<std::size_t>(C.n) + 16;
  ReductionTrace trace;
  trace.total_multiplicity = C.multiplicity;

  TriangularCycle cur = C;
  std::size_t steps = 0;
  while (!is_graph(cur)) {
    if (steps >= cap)
      throw error(errc::iteration_cap_exceeded,
                  "reduction did not reach a graph cycle within " + std::to_string(cap) +
                      " steps (expected at most " + std::to_string((1 << C.n) - 1) + ")");
    int i = pick(degree_vector(cur));
    ReductionCertificate cert = reduce_step(cur, i);
    trace.consumed = std::max(trace.consumed, cert.consumed);
    cur = cert.after;
    trace.steps.push_back(std::move(cert));
    ++steps;
  }
  trace.coordinates = graph_coordinates(cur);
  trace.total_multiplicity = cur.multiplicity;

  std::vector<TruncatedSeries> entries;
  entries.reserve(trace.coordinates.size());
  for (const auto& a : trace.coordinates) entries.push_back(reduce_precision(a, m));
  MilnorSymbolSum sym(C.field, C.n, m);
  sym.add_term(trace.total_multiplicity, entries);
  return {std::move(sym), std::move(trace)};
}

std::pair<MilnorSymbolSum, ReductionTrace> regulator(const TriangularCycle& C, std::size_t m) {
  return regulator_with_schedule(C, m, [](const std::vector<int>& d) { return schedule(d); });
}

namespace {

bool note(std::string* diagnostic, const std::string& msg) {
  if (diagnostic) *diagnostic = msg;
  return false;
}

} // namespace

bool replay_certificate(const ReductionCertificate& cert, std::string* diagnostic) {
  try {
    const TriangularCycle& B = cert.before;
    int n = B.n;
    int i = cert.index - 1;
    const FieldSpec& f = B.field;
    std::size_t prec = B.precision;
    if (cert.index < 1 || cert.index > n) return note(diagnostic, "step index out of range");

    validate(B);
    std::vector<MultiPoly> prefix(B.polys.begin(), B.polys.begin() + i);
    FiniteAlgebra R(f, prec, prefix);

    const MultiPoly& Pi = B.polys[static_cast<std::size_t>(i)];
    int di = Pi.degree_in(i);
    if (di != cert.d) return note(diagnostic, "recorded degree disagrees with the before-relation");

    // chat must be the canonical lift of (-1)^{d_i} * Pbar_i(0)
    AlgebraElement c = R.reduce(face_at(Pi, i, Face::zero));
    if (di % 2 != 0)
      for (auto& s : c.coords) s = -s;
    if (!R.is_unit(c)) return note(diagnostic, "c^(i) is not a unit");
    if (R.to_poly(c).with_nvars(n) != cert.chat)
      return note(diagnostic, "chat is not the canonical lift of c^(i)");

    // y' = 0 face: the before-relation
    if (face_at(cert.Q, n, Face::zero) != Pi.with_nvars(n + 1))
      return note(diagnostic, "y' = 0 face of Q does not reproduce the before-relation");

    // y' = infinity face: -(y_i - 1)^{d-1} (y_i - chat)
    MultiPoly expect = infinity_face_product(cert.chat.with_nvars(n + 1), i, di, f, n + 1, prec);
    if (-face_at(cert.Q, n, Face::infinity) != expect)
      return note(diagnostic, "y' = infinity face of Q has the wrong shape");

    // y_i = 0 face: (-1)^{d_i} c^(i) (1 - y'), a unit times the excluded 1 - y'
    MultiPoly c_signed = di % 2 != 0 ? -cert.chat : cert.chat;
    MultiPoly one_minus_yp =
        one_poly(f, n + 1, prec) - MultiPoly::variable(f, n, n + 1, prec);
    if (face_at(cert.Q, i, Face::zero) != c_signed.with_nvars(n + 1) * one_minus_yp)
      return note(diagnostic, "y_i = 0 face of Q is not a unit multiple of 1 - y'");

    // y_i = infinity face: 1 - y' (monic top against the y'-side top)
    if (face_at(cert.Q, i, Face::infinity) != one_minus_yp)
      return note(diagnostic, "y_i = infinity face of Q is not 1 - y'");

    // re-derive the after-cycle from scratch
    ReductionCertificate fresh = reduce_step(B, cert.index);
    if (!(fresh.after == cert.after)) return note(diagnostic, "after-cycle does not replay");
    if (fresh.e != cert.e) return note(diagnostic, "multiplicity factor does not replay");
    if (fresh.Q != cert.Q) return note(diagnostic, "certificate polynomial does not replay");
    return true;
  } catch (const error& e) {
    return note(diagnostic, e.what());
  }
}

} // namespace fatpoint
