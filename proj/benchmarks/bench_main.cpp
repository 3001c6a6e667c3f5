#include <benchmark/benchmark.h>

#include "fock/eigen.hpp"
#include "fock/experiments.hpp"
#include "fock/parallel.hpp"
#include "fock/symbols.hpp"
#include "fock/toeplitz.hpp"

using namespace fock;

static void BM_GaussLaguerre(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre(10.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussLaguerre)->Arg(96)->Arg(192)->Arg(384);

static void BM_RadialEigenvaluesSmooth(benchmark::State& state) {
  const FockParams p(2.0, static_cast<int>(state.range(0)));
  const auto f = RadialProfile::rational(5.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(radial_eigenvalues(f, p));
}
BENCHMARK(BM_RadialEigenvaluesSmooth)->Arg(64)->Arg(256);

static void BM_RadialEigenvaluesPiecewise(benchmark::State& state) {
  const FockParams p(2.0, static_cast<int>(state.range(0)));
  const auto f = RadialProfile::piecewise({0, 0.75, 1.5, 2.25, 3, 3.75, 4.5, 5.25, 6}, {1, -1, 1, -1, 1, -1, 1, -1}, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(radial_eigenvalues(f, p));
}
BENCHMARK(BM_RadialEigenvaluesPiecewise)->Arg(64)->Arg(256);

static void BM_AssembleGeneral(benchmark::State& state) {
  set_max_threads(1);
  const FockParams p(2.0, static_cast<int>(state.range(0)));
  const Symbol s = translate(RadialProfile::rational(5.0, 1.0), cplx(1.0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_general(s, p));
}
BENCHMARK(BM_AssembleGeneral)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_AssembleWeyl(benchmark::State& state) {
  const FockParams p(2.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_weyl_phase(cplx(3.0, 1.0), p));
}
BENCHMARK(BM_AssembleWeyl)->Arg(100)->Arg(400);

static void BM_Jacobi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = assemble_general(catalog::directional(), FockParams(2.0, n));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigs(a));
}
BENCHMARK(BM_Jacobi)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_RatioObjective(benchmark::State& state) {
  const FockParams p(2.0, 256);
  const auto f = RadialProfile::piecewise({0, 1, 2, 3, 4, 5, 6}, {0.5, -0.2, 1, 0.3, -1, 0.1}, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(ratio_objective(f, p));
}
BENCHMARK(BM_RatioObjective)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
