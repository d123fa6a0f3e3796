#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "rotzp/analytic_cf.hpp"
#include "rotzp/stochastic_field.hpp"
#include "support.hpp"

using namespace rotzp;
using rotzp::test::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

McConfig band_config(int realizations, std::uint64_t seed, FieldKind field = FieldKind::em) {
  McConfig c;
  c.spectrum.field = field;
  c.n_modes = 48;
  c.n_realizations = realizations;
  c.seed = seed;
  return c;
}

double z(const CFValue& v, double expect) { return std::abs(v.value - expect) / v.std_error; }

}  // namespace

TEST(SampleModes, Deterministic) {
  SpectrumConfig s;
  const auto a = sample_modes(s, 1, 77);
  const auto b = sample_modes(s, 1, 77);
  ASSERT_EQ(a.modes.size(), b.modes.size());
  for (std::size_t i = 0; i < a.modes.size(); ++i) {
    EXPECT_EQ(a.modes[i].direction, b.modes[i].direction);
    EXPECT_EQ(a.modes[i].phase, b.modes[i].phase);
    EXPECT_EQ(a.modes[i].wavenumber, b.modes[i].wavenumber);
  }
  EXPECT_EQ(a.modes.size(), 2u);
  SpectrumConfig sc;
  sc.field = FieldKind::scalar;
  EXPECT_EQ(sample_modes(sc, 5, 1).modes.size(), 5u);
}

TEST(SampleModes, DirectionsUniformOnSphere) {
  SpectrumConfig s;
  s.field = FieldKind::scalar;
  const int n = 100000;
  const auto ms = sample_modes(s, n, 5);
  Vec3 mean{};
  for (const auto& m : ms.modes) {
    mean += m.direction;
    EXPECT_NEAR(norm(m.direction), 1.0, 1e-14);
  }
  mean = mean * (1.0 / n);
  const double sigma = 1.0 / std::sqrt(3.0 * n);
  EXPECT_LT(std::abs(mean.x), 3 * sigma);
  EXPECT_LT(std::abs(mean.y), 3 * sigma);
  EXPECT_LT(std::abs(mean.z), 3 * sigma);
}

TEST(SampleModes, WeightsCoverBandVolume) {
  SpectrumConfig s;
  const auto ms = sample_modes(s, 200, 3);
  double w = 0;
  for (const auto& m : ms.modes) {
    if (m.polarization_index == 1) w += m.weight;
    EXPECT_GE(m.wavenumber, s.k_min);
    EXPECT_LE(m.wavenumber, s.k_max);
  }
  EXPECT_NEAR(w, 4 * kPi / 3 * (std::pow(s.k_max, 3) - std::pow(s.k_min, 3)), 1e-11);
}

TEST(SampleModes, DiscreteShellsOnly) {
  SpectrumConfig s;
  s.kind = SpectrumKind::discrete;
  s.n_max = 3;
  std::set<double> ks;
  for (const auto& m : sample_modes(s, 20, 9).modes) ks.insert(m.wavenumber);
  for (double k : ks) EXPECT_TRUE(k == 0.0 || k == 1.0 || k == 2.0 || k == 3.0) << k;
  EXPECT_EQ(ks.size(), 3u);
}

TEST(SampleModes, RejectsBadInput) {
  SpectrumConfig s;
  EXPECT_THROW(sample_modes(s, 0, 1), std::invalid_argument);
  s.k_max = s.k_min;
  EXPECT_THROW(sample_modes(s, 4, 1), std::invalid_argument);
}

TEST(Polarization, CompletenessSum) {
  Gen g(21);
  for (int i = 0; i < 500; ++i) {
    const double ct = g.uniform(-1, 1), ph = g.uniform(0, 2 * kPi);
    const double st = std::sqrt(1 - ct * ct);
    const Vec3 k{st * std::cos(ph), st * std::sin(ph), ct};
    const auto [e1, e2] = polarization_basis(k);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const double s = e1[a] * e1[b] + e2[a] * e2[b];
        EXPECT_NEAR(s, (a == b ? 1.0 : 0.0) - k[a] * k[b], 1e-14);
      }
    }
    EXPECT_NEAR(dot(e1, k), 0.0, 1e-15);
    const Vec3 c = cross(k, e1);
    EXPECT_NEAR(norm(c - e2), 0.0, 1e-14);
  }
  const auto [z1, z2] = polarization_basis({0, 0, 1});
  EXPECT_NEAR(norm(z1), 1.0, 1e-15);
  EXPECT_NEAR(norm(z2), 1.0, 1e-15);
}

TEST(EvalLab, EmptySetGivesZero) {
  ModeSet ms;
  const auto p = RotationParams::from_beta(0.4);
  const auto f = eval_em_lab(ms, p, 1.0);
  EXPECT_EQ(f.E, Vec3{});
  EXPECT_EQ(f.H, Vec3{});
  ms.field = FieldKind::scalar;
  EXPECT_EQ(eval_scalar_lab(ms, p, 1.0), 0.0);
}

TEST(EvalLab, SingleModeAtZeroPhase) {
  ModeSet ms;
  Mode m;
  m.direction = {0, 0, 1};
  m.wavenumber = 1.0;
  m.phase = 0.0;
  m.weight = 0.25;
  ms.modes.push_back(m);
  const auto p = RotationParams::from_beta(0.5);
  const auto f = eval_em_lab(ms, p, 0.0);
  const Vec3 eps = polarization_vector(m);
  const double amp = std::sqrt(m.weight) * em_amplitude(1.0);
  EXPECT_NEAR(norm(f.E - amp * eps), 0.0, 1e-15);
  EXPECT_NEAR(norm(f.H - amp * cross(m.direction, eps)), 0.0, 1e-15);
}

TEST(EvalLab, ScalarDeterministicUnderSeed) {
  SpectrumConfig s;
  s.field = FieldKind::scalar;
  const auto p = RotationParams::from_beta(0.3);
  EXPECT_EQ(eval_scalar_lab(sample_modes(s, 32, 8), p, 0.7), eval_scalar_lab(sample_modes(s, 32, 8), p, 0.7));
}

TEST(EvalLab, ScalarVarianceMatchesBandIntegral) {
  SpectrumConfig s;
  s.field = FieldKind::scalar;
  const auto p = RotationParams::from_beta(0.0);
  const int n = 4000;
  double sum = 0, sum2 = 0;
  for (int r = 0; r < n; ++r) {
    const double v = eval_scalar_lab(sample_modes(s, 16, realization_seed(44, r)), p, 0.0);
    sum += v * v;
    sum2 += v * v * v * v;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / (n - 1));
  // Oracle: int d^3k f^2 / 2 over the band.
  const double q = quad::integrate([](double k) { return 4 * kPi * k * k * scalar_amplitude(k) * scalar_amplitude(k) / 2; },
                                   s.k_min, s.k_max)
                       .value;
  EXPECT_LT(std::abs(mean - q) / se, 3.0);
}

TEST(ModeIo, RoundTripIsBitExact) {
  SpectrumConfig s;
  const auto ms = sample_modes(s, 7, 123);
  std::stringstream io;
  write_modes(io, ms);
  const auto back = read_modes(io);
  ASSERT_EQ(back.modes.size(), ms.modes.size());
  EXPECT_EQ(back.seed, ms.seed);
  EXPECT_EQ(back.k_min, ms.k_min);
  for (std::size_t i = 0; i < ms.modes.size(); ++i) {
    EXPECT_EQ(back.modes[i].direction, ms.modes[i].direction);
    EXPECT_EQ(back.modes[i].phase, ms.modes[i].phase);
    EXPECT_EQ(back.modes[i].weight, ms.modes[i].weight);
    EXPECT_EQ(back.modes[i].polarization_index, ms.modes[i].polarization_index);
  }
}

TEST(RealizationSeed, DistinctStreams) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(realization_seed(1, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(realization_seed(1, 0), realization_seed(2, 0));
}

TEST(McCorrelation, OffDiagonalVanishesAtEqualTimes) {
  const auto p = RotationParams::from_beta(0.5);
  const auto v = mc_correlation({FieldPair::EE, 1, 2}, p, 0.0, 0.0, band_config(600, 31));
  EXPECT_LT(std::abs(v.value) / v.std_error, 3.0);
}

TEST(McCorrelation, EqualPointEHVanishes) {
  const auto p = RotationParams::from_beta(0.5);
  for (int a = 1; a <= 3; ++a) {
    const auto v = mc_correlation({FieldPair::EH, a, a}, p, 0.3, 0.3, band_config(1000, 32));
    EXPECT_LT(std::abs(v.value) / v.std_error, 3.0) << a;
  }
}

TEST(McCorrelation, E11MatchesBandQuadrature) {
  const auto p = RotationParams::from_beta(0.5);
  CFQuadratureConfig qc;
  qc.band = Band{0.5, 1.5};
  const CFComponentId e11{FieldPair::EE, 1, 1};
  const double tau2[] = {0.0, 0.8};
  const CFComponentId comps[] = {e11};
  const auto mc = mc_correlation_batch(comps, p, 0.0, tau2, band_config(600, 33))[0];
  for (int i = 0; i < 2; ++i) {
    const double q = em_cf_quadrature(e11, CFLagParams::from_rotation(p, tau2[i]), qc);
    EXPECT_LT(z(mc[i], q), 3.0) << i;
  }
}

TEST(McCorrelation, StaticLimitRotatesComponents) {
  // beta = 0: <E_(1)E_(1)>(delta) = cos(delta) <E_(3)E_(3)>(delta).
  const auto p = RotationParams::from_beta(0.0);
  CFQuadratureConfig qc;
  qc.band = Band{0.5, 1.5};
  const auto lag = CFLagParams::from_rotation(p, 0.9);
  const double q11 = em_cf_quadrature({FieldPair::EE, 1, 1}, lag, qc);
  const double q33 = em_cf_quadrature({FieldPair::EE, 3, 3}, lag, qc);
  EXPECT_NEAR(q11, std::cos(0.9) * q33, 1e-10);
  const auto v = mc_correlation({FieldPair::EE, 1, 1}, p, 0.0, 0.9, band_config(600, 34));
  EXPECT_LT(z(v, q11), 3.0);
}

TEST(McCorrelation, StationaryInProperTime) {
  const auto p = RotationParams::from_beta(0.6);
  const CFComponentId e22{FieldPair::EE, 2, 2};
  const auto a = mc_correlation(e22, p, 0.0, 0.5, band_config(500, 35));
  const auto b = mc_correlation(e22, p, 2.3, 2.8, band_config(500, 36));
  EXPECT_LT(std::abs(a.value - b.value) / std::hypot(a.std_error, b.std_error), 3.0);
}

TEST(McCorrelation, DiscretePeriodicInLag) {
  const auto p = RotationParams::from_beta(0.5);
  McConfig c = band_config(300, 37);
  c.spectrum.kind = SpectrumKind::discrete;
  c.spectrum.n_max = 3;
  c.n_modes = 16;
  const double period = 2 * kPi / p.gamma();
  const double tau2[] = {0.6, 0.6 + period};
  const CFComponentId comps[] = {{FieldPair::EE, 1, 1}};
  const auto v = mc_correlation_batch(comps, p, 0.0, tau2, c)[0];
  // Same realizations: the two lags see identical phases, so agreement is tight.
  EXPECT_LT(std::abs(v[0].value - v[1].value), 1e-9 * (1 + std::abs(v[0].value)));
}

TEST(McCorrelation, StandardErrorScaling) {
  const auto p = RotationParams::from_beta(0.3);
  const CFComponentId e11{FieldPair::EE, 1, 1};
  const auto a = mc_correlation(e11, p, 0.0, 0.4, band_config(100, 38));
  const auto b = mc_correlation(e11, p, 0.0, 0.4, band_config(1000, 39));
  const double ratio = a.std_error / b.std_error;
  EXPECT_GT(ratio, std::sqrt(10.0) / 2);
  EXPECT_LT(ratio, std::sqrt(10.0) * 2);
}

TEST(McCorrelation, HHMatchesEEAtEqualPoints) {
  const auto p = RotationParams::from_beta(0.4);
  CFQuadratureConfig qc;
  qc.band = Band{0.5, 1.5};
  const auto lag = CFLagParams::from_rotation(p, 0.0);
  for (int a = 1; a <= 3; ++a) {
    const double ee = em_cf_quadrature({FieldPair::EE, a, a}, lag, qc);
    const double hh = em_cf_hh_eh({FieldPair::HH, a, a}, lag, qc);
    EXPECT_NEAR(hh, ee, 1e-10 * std::abs(ee));
    const auto v = mc_correlation({FieldPair::HH, a, a}, p, 0.0, 0.0, band_config(400, 40 + a));
    EXPECT_LT(z(v, hh), 3.0);
  }
}

TEST(McCorrelation, Validation) {
  const auto p = RotationParams::from_beta(0.3);
  EXPECT_THROW(mc_correlation({FieldPair::EE, 1, 1}, p, 0, 1, band_config(1, 1)), std::invalid_argument);
  EXPECT_THROW(mc_correlation({FieldPair::SS, 1, 1}, p, 0, 1, band_config(10, 1)), std::invalid_argument);
  EXPECT_THROW(mc_correlation({FieldPair::EE, 1, 1}, p, 0, 1, band_config(10, 1, FieldKind::scalar)),
               std::invalid_argument);
}

TEST(McCorrelation, E12IsNonzeroAndMatchesQuadrature) {
  const auto p = RotationParams::from_beta(0.9);
  CFQuadratureConfig qc;
  qc.band = Band{0.5, 1.5};
  const double dtau = 1.0 / p.gamma();
  const CFComponentId e12{FieldPair::EE, 1, 2};
  const double q = em_cf_quadrature(e12, CFLagParams::from_rotation(p, dtau), qc);
  const auto v = mc_correlation(e12, p, 0.0, dtau, band_config(2000, 45));
  EXPECT_LT(z(v, q), 3.0);
  EXPECT_GT(std::abs(v.value) / v.std_error, 5.0);
  EXPECT_NEAR(em_cf_quadrature({FieldPair::EE, 2, 1}, CFLagParams::from_rotation(p, dtau), qc), -q, 1e-10);
}
