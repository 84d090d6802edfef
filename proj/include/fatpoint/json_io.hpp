#ifndef FATPOINT_JSON_IO_HPP
#define FATPOINT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "fatpoint/milnor.hpp"
#include "fatpoint/reduction.hpp"
#include "fatpoint/witness.hpp"

namespace fatpoint {

using json = nlohmann::json;

// FieldSpec wire form: "Q" or {"Fp": 101}.
FieldSpec field_from_json(const json& j);
json field_to_json(const FieldSpec& f);

// Cycle document: {"field":..., "precision":N, "n":n, "polys":[...],
// "multiplicity":1}. Parse errors carry line/column of the offending
// polynomial string.
TriangularCycle cycle_from_json(const json& j);
json cycle_to_json(const TriangularCycle& C);

// Symbol document: {"n":2, "m":3, "terms":[{"coeff":1, "entries":[...]}]}.
MilnorSymbolSum symbol_from_json(const json& j, const FieldSpec& f);
json symbol_to_json(const MilnorSymbolSum& s);

// Self-contained reduction trace (every certificate field, replayable with
// no other input).
json trace_to_json(const ReductionTrace& t, const FieldSpec& f, std::size_t precision, int n);
struct ParsedTrace {
  FieldSpec field;
  std::size_t precision = 0;
  int n = 0;
  ReductionTrace trace;
};
ParsedTrace trace_from_json(const json& j);

json faces_to_json(const std::vector<WitnessFace>& faces);
json witness_to_json(const WitnessResult& w);

/// FNV-1a content digest of canonical input text, for RunReports.
std::string digest(const std::string& content);

} // namespace fatpoint

#endif
