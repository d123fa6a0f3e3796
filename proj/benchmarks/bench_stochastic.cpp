#include <benchmark/benchmark.h>

#include "rotzp/stochastic_field.hpp"

using namespace rotzp;

static void BM_SampleModes(benchmark::State& state) {
  SpectrumConfig s;
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sample_modes(s, static_cast<int>(state.range(0)), seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleModes)->Arg(64)->Arg(1024);

static void BM_EvalEmLab(benchmark::State& state) {
  SpectrumConfig s;
  const auto ms = sample_modes(s, static_cast<int>(state.range(0)), 3);
  const auto p = RotationParams::from_beta(0.5);
  double tau = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_em_lab(ms, p, tau));
    tau += 0.01;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ms.modes.size()));
}
BENCHMARK(BM_EvalEmLab)->Arg(64)->Arg(1024);

static void BM_McCorrelation(benchmark::State& state) {
  McConfig c;
  c.n_modes = 48;
  c.n_realizations = static_cast<int>(state.range(0));
  const auto p = RotationParams::from_beta(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(mc_correlation({FieldPair::EE, 1, 1}, p, 0.0, 0.8, c));
}
BENCHMARK(BM_McCorrelation)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_McDiscrete(benchmark::State& state) {
  McConfig c;
  c.spectrum.kind = SpectrumKind::discrete;
  c.spectrum.n_max = static_cast<int>(state.range(0));
  c.n_modes = 64;
  c.n_realizations = 100;
  const auto p = RotationParams::from_beta(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(mc_correlation({FieldPair::EE, 1, 1}, p, 0.0, 0.8, c));
}
BENCHMARK(BM_McDiscrete)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
