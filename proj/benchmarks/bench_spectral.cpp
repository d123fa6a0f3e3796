#include <benchmark/benchmark.h>

#include <complex>

#include "rotzp/spectral_sums.hpp"
#include "rotzp/thermo.hpp"

using namespace rotzp;

static void BM_S3Remainder(benchmark::State& state) {
  double F = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s3_thermal_remainder(F));
    F = F > 6.0 ? 0.0 : F + 0.05;
  }
}
BENCHMARK(BM_S3Remainder);

static void BM_S3ThermalIntegral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(s3_thermal_integral(2.0));
}
BENCHMARK(BM_S3ThermalIntegral)->Unit(benchmark::kMicrosecond);

static void BM_S3AltSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s3_alt_series(1.0, n));
}
BENCHMARK(BM_S3AltSeries)->Arg(100)->Arg(10000)->Unit(benchmark::kMicrosecond);

static void BM_AbelRegularized(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(abel_regularized_limit(3, 2.0));
}
BENCHMARK(BM_AbelRegularized)->Unit(benchmark::kMicrosecond);

static void BM_AbelPlana(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(abel_plana([](std::complex<double> z) { return z * z * z * std::exp(-z); }));
  }
}
BENCHMARK(BM_AbelPlana)->Unit(benchmark::kMillisecond);

static void BM_DiscreteE11(benchmark::State& state) {
  const auto lag = CFLagParams::make(0.6, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(discrete_em_cf_E11(lag));
}
BENCHMARK(BM_DiscreteE11)->Unit(benchmark::kMillisecond);

static void BM_EmDensity(benchmark::State& state) {
  const auto p = RotationParams::from_beta(0.6, 1e9, 299792458.0);
  for (auto _ : state) benchmark::DoNotOptimize(em_density_rotating(p));
}
BENCHMARK(BM_EmDensity)->Unit(benchmark::kMicrosecond);
