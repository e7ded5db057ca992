#include <benchmark/benchmark.h>

#include "csanyon/solver.hpp"
#include "csanyon/sympoly.hpp"
#include "csanyon/vertex.hpp"
#include "csanyon/wcharges.hpp"

using namespace csanyon;

namespace {
const Scalar kSqrt2 = Scalar::sqrt_rational(Rat(2));

void bm_build_eta(benchmark::State& state) {
  const std::vector<int> n = {static_cast<int>(state.range(0)), 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(build_eta(kSqrt2, n));
}
BENCHMARK(bm_build_eta)->Arg(2)->Arg(4);

void bm_build_eigenvector(benchmark::State& state) {
  const std::vector<int> n = {static_cast<int>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(build_eigenvector(kSqrt2, n));
}
BENCHMARK(bm_build_eigenvector)->Arg(2)->Arg(3)->Arg(4);

void bm_jack_oracle(benchmark::State& state) {
  const Partition lam = {static_cast<int>(state.range(0)), 2, 1};
  for (auto _ : state)
    benchmark::DoNotOptimize(jack_polynomial(kSqrt2, lam, 4));
}
BENCHMARK(bm_jack_oracle)->Arg(3)->Arg(5);

void bm_sector_matrix(benchmark::State& state) {
  const auto h3 = make_operator(ChargeKind::H3, kSqrt2,
                                static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sector_matrix(h3, 1, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_sector_matrix)->Arg(4)->Arg(6);
}  // namespace

BENCHMARK_MAIN();
