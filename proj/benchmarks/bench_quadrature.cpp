#include <benchmark/benchmark.h>

#include <cmath>

#include "rotzp/analytic_cf.hpp"
#include "rotzp/quadrature.hpp"

using namespace rotzp;

static void BM_GaussKronrodSmooth(benchmark::State& state) {
  for (auto _ : state) {
    auto r = quad::integrate([](double x) { return std::exp(-x) * std::cos(5 * x); }, 0.0, 4.0);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_GaussKronrodSmooth);

static void BM_ThetaIntegralClosed(benchmark::State& state) {
  double k = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_integral(3, k));
    k = k > 0.98 ? 0.0 : k + 0.01;
  }
}
BENCHMARK(BM_ThetaIntegralClosed);

static void BM_E11Closed(benchmark::State& state) {
  const auto lag = CFLagParams::make(0.6, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(em_cf_closed_E11(lag));
}
BENCHMARK(BM_E11Closed);

static void BM_E11Quadrature(benchmark::State& state) {
  const auto lag = CFLagParams::make(state.range(0) / 100.0, 1.0);
  const CFComponentId e11{FieldPair::EE, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(em_cf_quadrature(e11, lag));
}
BENCHMARK(BM_E11Quadrature)->Arg(0)->Arg(60)->Arg(90)->Unit(benchmark::kMillisecond);

static void BM_ScalarQuadrature(benchmark::State& state) {
  const auto p = RotationParams::from_beta(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(scalar_cf_quadrature(p, 1.0));
}
BENCHMARK(BM_ScalarQuadrature)->Unit(benchmark::kMicrosecond);
