// Batch regulator throughput: the serial reference path against the OpenMP
// path of run_batch, on identical random inputs. Results are compared for
// equality before timing is reported.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "fatpoint/batch.hpp"
#include "fatpoint/reduction.hpp"

using namespace fatpoint;

namespace {

TruncatedSeries random_unit(std::mt19937_64& rng, const FieldSpec& f, std::size_t prec) {
  std::uniform_int_distribution<long long> d(-9, 9);
  for (;;) {
    TruncatedSeries s(f, prec);
    for (std::size_t j = 0; j < prec; ++j)
      s.set_coeff(j, FieldElement::from_int(f, d(rng)));
    if (s.is_unit() && !s.is_one()) return s;
  }
}

TriangularCycle random_quartic(std::mt19937_64& rng, const FieldSpec& f, std::size_t prec) {
  std::uniform_int_distribution<long long> d(-9, 9);
  for (;;) {
    MultiPoly p(f, 1, prec);
    p.add_term(ExpVec{4}, TruncatedSeries::from_int(f, 1, prec));
    for (int k = 1; k < 4; ++k) {
      TruncatedSeries c(f, prec);
      for (std::size_t j = 0; j < prec; ++j) c.set_coeff(j, FieldElement::from_int(f, d(rng)));
      p.add_term(ExpVec{k}, c);
    }
    p.add_term(ExpVec{0}, random_unit(rng, f, prec));
    TriangularCycle C{f, 1, prec, {p}, 1};
    try {
      validate(C);
      return C;
    } catch (const error&) {
    }
  }
}

double run(const std::vector<TriangularCycle>& cycles, std::size_t m, int jobs,
           std::vector<MilnorSymbolSum>* out) {
  auto t0 = std::chrono::steady_clock::now();
  run_batch(cycles.size(), jobs, [&](std::size_t i) {
    auto [sym, trace] = regulator(cycles[i], m);
    (*out)[i] = sym;
  });
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
  const std::size_t count = 400;
  const std::size_t m = 4;
  const std::size_t prec = 2 * m + 4;
  int jobs = batch_hardware_jobs();
  bool all_equal = true;

  struct Lane {
    const char* name;
    FieldSpec field;
  } lanes[] = {{"Q", FieldSpec::rationals()}, {"F_101", FieldSpec::prime_field(101)}};

  for (const Lane& lane : lanes) {
    std::mt19937_64 rng(20240801);
    std::vector<TriangularCycle> cycles;
    cycles.reserve(count);
    for (std::size_t i = 0; i < count; ++i) cycles.push_back(random_quartic(rng, lane.field, prec));

    MilnorSymbolSum blank(lane.field, 1, m);
    std::vector<MilnorSymbolSum> serial(count, blank), parallel(count, blank);

    run(cycles, m, jobs, &parallel); // warm allocator arenas and caches
    double tser = 1e300, tpar = 1e300;
    for (int round = 0; round < 3; ++round) {
      tser = std::min(tser, run(cycles, m, 1, &serial));
      tpar = std::min(tpar, run(cycles, m, jobs, &parallel));
    }

    bool equal = true;
    for (std::size_t i = 0; i < count; ++i) equal = equal && serial[i] == parallel[i];
    all_equal = all_equal && equal;

    std::printf("batch of %zu degree-4 regulator runs over %s, m = %zu, N = %zu\n", count,
                lane.name, m, prec);
    std::printf("  serial reference : %8.1f ms\n", tser);
    std::printf("  openmp (%2d jobs) : %8.1f ms   speedup %.2fx\n", jobs, tpar, tser / tpar);
    std::printf("  results identical: %s\n", equal ? "yes" : "NO");
  }
  return all_equal ? 0 : 1;
}
