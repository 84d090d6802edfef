// fatpoint: exact computations with triangular cycles over k[[t]] at finite
// t-adic precision — validation, degree-vector reduction with replayable
// certificates, the regulator to Milnor K-theory of k[t]/(t^m), relation
// witness cycles, and big Witt vector arithmetic.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fatpoint/batch.hpp"
#include "fatpoint/json_io.hpp"
#include "fatpoint/text.hpp"
#include "fatpoint/witt.hpp"

using namespace fatpoint;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw error(errc::parse_error, what + " is not valid JSON");
  return j;
}

std::size_t default_precision(std::size_t m) {
  if (const char* env = std::getenv("FATPOINT_PRECISION")) {
    long v = std::atol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return 2 * m + 4;
}

struct Report {
  json out;
  std::string summary;
};

json base_report(const std::string& command, const std::string& inputs) {
  json j;
  j["command"] = command;
  j["inputs_digest"] = digest(inputs);
  return j;
}

Report run_validate(const std::string& doc_text) {
  TriangularCycle C = cycle_from_json(parse_json(doc_text, "cycle document"));
  FaceReport fr = validate(C);
  json j = base_report("validate", doc_text);
  j["ok"] = true;
  json faces = json::array();
  for (const auto& f : fr.faces)
    faces.push_back(json{{"var", f.var},
                         {"at", f.eps == Face::zero ? "0" : "inf"},
                         {"empty", f.empty},
                         {"note", f.note}});
  j["faces"] = faces;
  j["degree_vector"] = degree_vector(C);
  return {j, "cycle is admissible"};
}

Report run_reduce(const std::string& doc_text, std::size_t m, bool symbol_only,
                  const std::string& trace_path) {
  TriangularCycle C = cycle_from_json(parse_json(doc_text, "cycle document"));
  auto [sym, trace] = regulator(C, m);
  json j = base_report(symbol_only ? "regulator" : "reduce", doc_text);
  json symbol = json::array();
  for (const auto& t : sym.terms()) {
    json entries = json::array();
    for (const auto& e : t.entries) entries.push_back(e.str());
    symbol.push_back(json::array({t.coeff, entries}));
  }
  j["symbol"] = symbol;
  j["multiplicity"] = trace.total_multiplicity;
  j["m"] = m;
  j["precision_consumed"] = trace.consumed;
  if (!symbol_only) j["steps"] = trace.steps.size();
  if (!trace_path.empty()) {
    json tj = trace_to_json(trace, C.field, C.precision, C.n);
    std::ofstream out(trace_path);
    if (!out) throw error(errc::parse_error, "cannot write " + trace_path);
    out << tj.dump(2) << "\n";
    j["trace_written"] = trace_path;
  }
  return {j, "reduced in " + std::to_string(trace.steps.size()) + " step(s)"};
}

Report run_equiv(const std::string& t1, const std::string& t2, std::size_t m) {
  TriangularCycle C1 = cycle_from_json(parse_json(t1, "first cycle document"));
  TriangularCycle C2 = cycle_from_json(parse_json(t2, "second cycle document"));
  validate(C1);
  validate(C2);
  json j = base_report("equiv", t1 + "\n" + t2);
  j["m"] = m;
  j["equivalent"] = mod_I_equivalent(C1, C2, m);
  return {j, j["equivalent"].get<bool>() ? "equivalent mod t^m" : "not equivalent mod t^m"};
}

Report run_graph(const std::vector<std::string>& units, const FieldSpec& f, std::size_t prec) {
  std::vector<TruncatedSeries> a;
  a.reserve(units.size());
  for (const auto& u : units) a.push_back(parse_series(u, f, prec));
  TriangularCycle C = graph_cycle(a);
  json j = base_report("graph", json(units).dump());
  j["cycle"] = cycle_to_json(C);
  return {j, "graph cycle built"};
}

Report run_witness(const std::string& kind, const std::vector<std::string>& params,
                   const std::vector<std::string>& tail_texts, const FieldSpec& f,
                   std::size_t prec) {
  std::vector<TruncatedSeries> tail;
  tail.reserve(tail_texts.size());
  for (const auto& s : tail_texts) tail.push_back(parse_series(s, f, prec));
  WitnessResult w = kind == "steinberg"
                        ? steinberg_witness(parse_series(params.at(0), f, prec), tail)
                        : product_witness(parse_series(params.at(0), f, prec),
                                          parse_series(params.at(1), f, prec), tail);
  json j = base_report("witness " + kind, json(params).dump());
  j["witness"] = witness_to_json(w);
  return {j, "witness faces computed"};
}

Report run_witt(const std::string& subop, const std::vector<std::string>& args,
                const FieldSpec& f, std::size_t m) {
  json j = base_report("witt " + subop, json(args).dump());
  if (subop == "add" || subop == "mul") {
    WittVector x{m, parse_series(args.at(0), f, m + 1)};
    WittVector y{m, parse_series(args.at(1), f, m + 1)};
    WittVector r = subop == "add" ? witt_add(x, y) : witt_mul(x, y);
    j["result"] = r.series.str();
  } else if (subop == "coords") {
    WittVector x{m, parse_series(args.at(0), f, m + 1)};
    json coords = json::array();
    for (const auto& c : witt_coordinates(x)) coords.push_back(c.str());
    j["coordinates"] = coords;
  } else if (subop == "ghost") {
    WittVector x{m, parse_series(args.at(0), f, m + 1)};
    json gh = json::array();
    for (const auto& c : ghost(x)) gh.push_back(c.str());
    j["ghost"] = gh;
  } else {
    throw error(errc::parse_error, "unknown witt subcommand " + subop);
  }
  return {j, "witt " + subop + " done"};
}

Report run_replay(const std::string& trace_text, bool& verified) {
  ParsedTrace pt = trace_from_json(parse_json(trace_text, "trace"));
  json j = base_report("replay", trace_text);
  json steps = json::array();
  bool all_ok = true;
  for (std::size_t k = 0; k < pt.trace.steps.size(); ++k) {
    const ReductionCertificate& cert = pt.trace.steps[k];
    std::string diag;
    bool ok = replay_certificate(cert, &diag);
    if (ok && k + 1 < pt.trace.steps.size())
      if (!(cert.after == pt.trace.steps[k + 1].before)) {
        ok = false;
        diag = "chain break: after of step " + std::to_string(k + 1) +
               " does not match the next before";
      }
    all_ok = all_ok && ok;
    json s;
    s["step"] = k + 1;
    s["verified"] = ok;
    if (!ok) s["diagnostic"] = diag;
    steps.push_back(s);
  }
  j["steps"] = steps;
  j["verified"] = all_ok;
  verified = verified && all_ok;
  return {j, all_ok ? "all certificates verified" : "certificate replay failed"};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cycles over Spf k[[t]]: validation, reduction certificates, the regulator "
               "to Milnor K-theory of k[t]/(t^m), witness cycles, big Witt vectors"};
  app.require_subcommand(1);

  std::vector<std::string> docs;
  std::size_t m = 2;
  std::string emit_trace;
  std::string field_text = "Q";
  std::size_t precision = 0;
  int jobs = 1;
  std::vector<std::string> units;
  std::vector<std::string> tail;
  std::string wa, wb;
  std::vector<std::string> witt_args;

  auto add_field_opts = [&](CLI::App* c) {
    c->add_option("--field", field_text, "base field: Q or Fp:<p>");
    c->add_option("--precision", precision, "working t-adic precision N (default 2m+4)");
  };

  CLI::App* v = app.add_subcommand("validate", "check admissibility of cycle documents");
  v->add_option("docs", docs, "cycle documents (JSON files, '-' for stdin)")->required();
  v->add_option("--jobs", jobs, "parallel workers for several documents");

  CLI::App* red = app.add_subcommand("reduce", "run the reduction and report the symbol");
  red->add_option("docs", docs, "cycle documents")->required();
  red->add_option("--mod,-m", m, "output precision m")->required();
  red->add_option("--emit-trace", emit_trace, "write the replayable trace JSON here");
  bool symbol_only_flag = false;
  red->add_flag("--symbol-only", symbol_only_flag, "suppress step counts (the regulator alias)");
  red->add_option("--jobs", jobs, "parallel workers for several documents");

  CLI::App* reg = app.add_subcommand("regulator", "reduce, symbol output only");
  reg->add_option("docs", docs, "cycle documents")->required();
  reg->add_option("--mod,-m", m, "output precision m")->required();
  reg->add_option("--jobs", jobs, "parallel workers for several documents");

  CLI::App* eq = app.add_subcommand("equiv", "mod t^m equivalence of two cycle documents");
  eq->add_option("docs", docs, "exactly two cycle documents")->required()->expected(2);
  eq->add_option("--mod,-m", m, "comparison precision m")->required();

  CLI::App* gr = app.add_subcommand("graph", "build the graph cycle of unit series");
  gr->add_option("units", units, "unit series literals")->required();
  gr->add_option("--mod,-m", m, "output precision m (sets the default N)");
  add_field_opts(gr);

  CLI::App* wit = app.add_subcommand("witness", "Steinberg/product relation witness cycles");
  CLI::App* wit_st = wit->add_subcommand("steinberg", "the cycle with only face Gamma_(a,1-a,...)");
  wit_st->add_option("--a", wa, "the unit a")->required();
  wit_st->add_option("--tail", tail, "tail units a_3..a_n");
  add_field_opts(wit_st);
  CLI::App* wit_pr = wit->add_subcommand("product", "the cycle with faces Gamma_a, Gamma_b, Gamma_ab");
  wit_pr->add_option("--a", wa, "the unit a")->required();
  wit_pr->add_option("--b", wb, "the unit b")->required();
  wit_pr->add_option("--tail", tail, "tail units a_2..a_n");
  add_field_opts(wit_pr);
  wit->require_subcommand(1);

  CLI::App* wt = app.add_subcommand("witt", "big Witt vector operations");
  CLI::App* wt_add = wt->add_subcommand("add", "series product (the Witt group law)");
  CLI::App* wt_mul = wt->add_subcommand("mul", "the Witt ring product");
  CLI::App* wt_coords = wt->add_subcommand("coords", "coordinates (a_1..a_m)");
  CLI::App* wt_ghost = wt->add_subcommand("ghost", "ghost components");
  for (CLI::App* c : {wt_add, wt_mul, wt_coords, wt_ghost}) {
    c->add_option("series", witt_args, "unit series literals at precision m+1")->required();
    c->add_option("--m", m, "Witt length m")->required();
    c->add_option("--field", field_text, "base field: Q or Fp:<p>");
  }
  wt->require_subcommand(1);

  CLI::App* rp = app.add_subcommand("replay", "verify every certificate of an emitted trace");
  rp->add_option("docs", docs, "trace JSON files")->required();

  CLI11_PARSE(app, argc, argv);

  auto t0 = std::chrono::steady_clock::now();
  try {
    FieldSpec field = FieldSpec::rationals();
    if (field_text != "Q") {
      if (field_text.rfind("Fp:", 0) != 0)
        throw error(errc::parse_error, "--field expects Q or Fp:<p>");
      field = FieldSpec::prime_field(std::strtoull(field_text.c_str() + 3, nullptr, 10));
    }
    std::size_t N = precision ? precision : default_precision(m);

    std::vector<Report> reports;
    auto emit = [&](const std::vector<Report>& rs) {
      if (rs.size() == 1)
        std::cout << rs[0].out.dump(2) << std::endl;
      else {
        json arr = json::array();
        for (const auto& r : rs) arr.push_back(r.out);
        std::cout << arr.dump(2) << std::endl;
      }
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      for (const auto& r : rs) std::cerr << r.summary << "\n";
      std::cerr << "elapsed " << ms << " ms" << std::endl;
    };

    if (app.got_subcommand(v) || app.got_subcommand(red) || app.got_subcommand(reg)) {
      std::vector<std::string> texts;
      texts.reserve(docs.size());
      for (const auto& d : docs) texts.push_back(read_input(d));
      reports.resize(texts.size());
      bool symbol_only = app.got_subcommand(reg) || symbol_only_flag;
      run_batch(texts.size(), jobs, [&](std::size_t i) {
        if (app.got_subcommand(v))
          reports[i] = run_validate(texts[i]);
        else
          reports[i] = run_reduce(texts[i], m, symbol_only,
                                  texts.size() == 1 ? emit_trace : std::string());
      });
      emit(reports);
    } else if (app.got_subcommand(eq)) {
      emit({run_equiv(read_input(docs[0]), read_input(docs[1]), m)});
    } else if (app.got_subcommand(gr)) {
      emit({run_graph(units, field, N)});
    } else if (app.got_subcommand(wit)) {
      if (wit->got_subcommand(wit_st))
        emit({run_witness("steinberg", {wa}, tail, field, N)});
      else
        emit({run_witness("product", {wa, wb}, tail, field, N)});
    } else if (app.got_subcommand(wt)) {
      std::string sub = wt->get_subcommands().at(0)->get_name();
      emit({run_witt(sub, witt_args, field, m)});
    } else if (app.got_subcommand(rp)) {
      bool verified = true;
      for (const auto& d : docs) reports.push_back(run_replay(read_input(d), verified));
      emit(reports);
      if (!verified) return 3;
    }
    return 0;
  } catch (const error& e) {
    json err;
    err["error"] = errc_name(e.code());
    err["message"] = e.what();
    std::cout << err.dump(2) << std::endl;
    std::cerr << e.what() << std::endl;
    return errc_exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 1;
  }
}
