#include "fatpoint/json_io.hpp"

#include "fatpoint/text.hpp"

namespace fatpoint {

FieldSpec field_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q") return FieldSpec::rationals();
    throw error(errc::parse_error, "unknown field \"" + s + "\" (expected \"Q\" or {\"Fp\":p})");
  }
  if (j.is_object() && j.contains("Fp"))
    return FieldSpec::prime_field(j.at("Fp").get<std::uint64_t>());
  throw error(errc::parse_error, "field must be \"Q\" or {\"Fp\":p}");
}

json field_to_json(const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::rationals) return json("Q");
  return json{{"Fp", f.p}};
}

TriangularCycle cycle_from_json(const json& j) {
  if (!j.is_object()) throw error(errc::parse_error, "cycle document must be a JSON object");
  TriangularCycle C;
  C.field = field_from_json(j.at("field"));
  if (!j.contains("precision")) throw error(errc::parse_error, "cycle document needs \"precision\"");
  C.precision = j.at("precision").get<std::size_t>();
  if (!j.contains("polys") || !j.at("polys").is_array())
    throw error(errc::parse_error, "cycle document needs a \"polys\" array");
  C.n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(j.at("polys").size());
  C.multiplicity = j.contains("multiplicity") ? j.at("multiplicity").get<long long>() : 1;
  if (C.precision < 1) throw error(errc::parse_error, "precision must be at least 1");
  if (C.n != static_cast<int>(j.at("polys").size()))
    throw error(errc::parse_error, "\"n\" does not match the number of polynomials");
  for (const auto& ps : j.at("polys")) {
    if (!ps.is_string()) throw error(errc::parse_error, "polynomials must be strings");
    C.polys.push_back(parse_poly(ps.get<std::string>(), C.field, C.n, C.precision));
  }
  return C;
}

json cycle_to_json(const TriangularCycle& C) {
  json j;
  j["field"] = field_to_json(C.field);
  j["precision"] = C.precision;
  j["n"] = C.n;
  json polys = json::array();
  for (const auto& p : C.polys) polys.push_back(p.str());
  j["polys"] = polys;
  j["multiplicity"] = C.multiplicity;
  return j;
}

MilnorSymbolSum symbol_from_json(const json& j, const FieldSpec& f) {
  int n = j.at("n").get<int>();
  std::size_t m = j.at("m").get<std::size_t>();
  MilnorSymbolSum s(f, n, m);
  for (const auto& t : j.at("terms")) {
    long long coeff = t.at("coeff").get<long long>();
    std::vector<TruncatedSeries> entries;
    for (const auto& es : t.at("entries"))
      entries.push_back(parse_series(es.get<std::string>(), f, m));
    s.add_term(coeff, std::move(entries));
  }
  return s;
}

json symbol_to_json(const MilnorSymbolSum& s) {
  json j;
  j["n"] = s.n();
  j["m"] = s.m();
  json terms = json::array();
  for (const auto& t : s.terms()) {
    json entries = json::array();
    for (const auto& e : t.entries) entries.push_back(e.str());
    terms.push_back(json{{"coeff", t.coeff}, {"entries", entries}});
  }
  j["terms"] = terms;
  return j;
}

json trace_to_json(const ReductionTrace& t, const FieldSpec& f, std::size_t precision, int n) {
  json j;
  j["field"] = field_to_json(f);
  j["precision"] = precision;
  j["n"] = n;
  json steps = json::array();
  for (const auto& c : t.steps) {
    json s;
    s["index"] = c.index;
    s["d"] = c.d;
    s["chat"] = c.chat.str();
    s["Q"] = c.Q.str(true);
    s["e"] = c.e;
    s["before"] = cycle_to_json(c.before);
    s["after"] = cycle_to_json(c.after);
    steps.push_back(s);
  }
  j["steps"] = steps;
  json coords = json::array();
  for (const auto& a : t.coordinates) coords.push_back(a.str());
  j["coordinates"] = coords;
  j["multiplicity"] = t.total_multiplicity;
  j["precision_consumed"] = t.consumed;
  return j;
}

ParsedTrace trace_from_json(const json& j) {
  ParsedTrace out;
  out.field = field_from_json(j.at("field"));
  out.precision = j.at("precision").get<std::size_t>();
  out.n = j.at("n").get<int>();
  for (const auto& s : j.at("steps")) {
    ReductionCertificate c;
    c.index = s.at("index").get<int>();
    c.d = s.at("d").get<int>();
    c.before = cycle_from_json(s.at("before"));
    c.after = cycle_from_json(s.at("after"));
    c.chat = parse_poly(s.at("chat").get<std::string>(), out.field, out.n, out.precision);
    c.Q = parse_poly(s.at("Q").get<std::string>(), out.field, out.n + 1, out.precision, true);
    c.e = s.at("e").get<long long>();
    out.trace.steps.push_back(std::move(c));
  }
  if (j.contains("coordinates"))
    for (const auto& a : j.at("coordinates"))
      out.trace.coordinates.push_back(parse_series(a.get<std::string>(), out.field, out.precision));
  if (j.contains("multiplicity"))
    out.trace.total_multiplicity = j.at("multiplicity").get<long long>();
  return out;
}

json faces_to_json(const std::vector<WitnessFace>& faces) {
  json out = json::array();
  for (const auto& fc : faces) {
    json f;
    f["var"] = fc.var;
    f["at"] = fc.eps == Face::zero ? "0" : "inf";
    if (fc.empty) {
      f["empty"] = true;
      f["reason"] = fc.reason;
    } else {
      f["empty"] = false;
      f["sign"] = fc.sign;
      json coords = json::array();
      for (const auto& c : fc.graph_coords) coords.push_back(c.str());
      f["graph"] = coords;
    }
    out.push_back(f);
  }
  return out;
}

json witness_to_json(const WitnessResult& w) {
  json j;
  j["field"] = field_to_json(w.system.field);
  j["precision"] = w.system.precision;
  j["cubical_variables"] = w.system.nvars;
  json polys = json::array();
  for (const auto& p : w.system.polys) polys.push_back(p.str());
  j["system"] = polys;
  j["faces"] = faces_to_json(w.faces);
  return j;
}

std::string digest(const std::string& content) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : content) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

} // namespace fatpoint
