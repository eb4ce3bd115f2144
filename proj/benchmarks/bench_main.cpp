#include <benchmark/benchmark.h>

#include "cablejones/jones.hpp"
#include "cablejones/numerics/quadrature.hpp"
#include "cablejones/numerics/special.hpp"

using namespace cablejones;

namespace {

constexpr Real::Bits kBits = 160;

void BM_EvalSSum(benchmark::State& state) {
  const CableSpec spec{static_cast<int>(state.range(0)), 1};
  const Real xi = Real::from_string("1.0", kBits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_S_sum(spec, xi));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalSSum)->Arg(125)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_CablePoly(benchmark::State& state) {
  const CableSpec spec{static_cast<int>(state.range(0)), 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cable_poly(spec));
  }
}
BENCHMARK(BM_CablePoly)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_Dilog(benchmark::State& state) {
  const Real x = Real::from_string("0.381966011250105151795", static_cast<Real::Bits>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dilog(x));
  }
}
BENCHMARK(BM_Dilog)->Arg(64)->Arg(160)->Arg(512);

void BM_QuadratureSqrtEndpoint(benchmark::State& state) {
  const Real zero(kBits);
  const Real one(1, kBits);
  const Real tol = Real::from_string("1e-25", kBits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate([](const Real& x) { return sqrt(x) * exp(-x); }, zero, one, tol).value);
  }
}
BENCHMARK(BM_QuadratureSqrtEndpoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
