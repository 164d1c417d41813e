#include <benchmark/benchmark.h>

#include "inoue/classify.hpp"
#include "inoue/descriptor.hpp"
#include "inoue/ot_bridge.hpp"
#include "inoue/search.hpp"

using namespace inoue;

namespace {

IntPoly P(std::initializer_list<long> coeffs_low_first) {
  std::vector<Int> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntMatrix random_matrix(std::uint64_t seed, int dim, long bound) {
  SplitMix64 rng(seed);
  IntMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = rng.next_in(-bound, bound);
  return m;
}

const IntPoly surface_poly = P({-1, 0, -1, 1});

} // namespace

static void BM_CharPolyBerkowitz(benchmark::State& state) {
  IntMatrix m = random_matrix(1, static_cast<int>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPolyBerkowitz)->Arg(3)->Arg(5)->Arg(7)->Arg(9)->Arg(12);

static void BM_SmithNormalForm(benchmark::State& state) {
  IntMatrix m = random_matrix(2, static_cast<int>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(5)->Arg(8)->Arg(12);

static void BM_IsolateRealRoots(benchmark::State& state) {
  // Degree-8 product with four real roots and two complex pairs.
  IntPoly p = P({-1, 1}) * P({-2, 1}) * P({3, 1}) * P({5, 1}) * P({1, -1, 1}) * P({2, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateRealRoots);

static void BM_RefineRealBits(benchmark::State& state) {
  auto iso = isolate_real_roots(surface_poly).front();
  long bits = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(refine_real(surface_poly, iso, bits));
}
BENCHMARK(BM_RefineRealBits)->Arg(64)->Arg(128)->Arg(256);

static void BM_EncloseComplexRoots(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enclose_complex_roots(surface_poly, state.range(0)));
}
BENCHMARK(BM_EncloseComplexRoots)->Arg(64)->Arg(128);

static void BM_CheckTypeI(benchmark::State& state) {
  IntMatrix m = IntMatrix::companion(surface_poly);
  for (auto _ : state) benchmark::DoNotOptimize(check_type_I(m));
}
BENCHMARK(BM_CheckTypeI);

static void BM_EigenData7x7(benchmark::State& state) {
  auto built = make_nondiagonalizable(surface_poly, P({1, -1, 1}));
  IntMatrix m = std::get<IntMatrix>(built);
  auto cert = std::get<TypeICertificate>(check_type_I(m));
  for (auto _ : state) benchmark::DoNotOptimize(eigen_data(m, cert, state.range(0)));
}
BENCHMARK(BM_EigenData7x7)->Arg(64)->Arg(128);

static void BM_DecideConjugacy(benchmark::State& state) {
  IntMatrix a = IntMatrix::companion(surface_poly);
  IntMatrix c{{1, 1, 0}, {0, 1, 0}, {1, 0, 1}};
  IntMatrix b = c * a * inverse_unimodular(c);
  for (auto _ : state) benchmark::DoNotOptimize(decide_conjugacy(a, b, 1000000));
}
BENCHMARK(BM_DecideConjugacy);

static void BM_CorrespondenceReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(correspondence_report(surface_poly, 128));
}
BENCHMARK(BM_CorrespondenceReport);

BENCHMARK_MAIN();
