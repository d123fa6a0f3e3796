#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rotzp/errors.hpp"
#include "rotzp/kinematics.hpp"
#include "support.hpp"

using namespace rotzp;
using rotzp::test::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

FourVector sub(const FourVector& a, const FourVector& b, double s = 1.0) {
  FourVector r;
  for (int i = 0; i < 4; ++i) r[i] = a[i] - s * b[i];
  return r;
}

double max_abs(const FourVector& v) {
  double m = 0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

// Centered fourth-order derivative of a tetrad leg.
FourVector leg_derivative(const RotationParams& p, double tau, int leg, double h) {
  auto L = [&](double t) { return frenet_serret_tetrad(p, t).legs[leg]; };
  const FourVector a = L(tau - 2 * h), b = L(tau - h), c = L(tau + h), d = L(tau + 2 * h);
  FourVector r;
  for (int i = 0; i < 4; ++i) r[i] = (a[i] - 8 * b[i] + 8 * c[i] - d[i]) / (12 * h);
  return r;
}

EmFieldFrame apply_lab(const Tetrad& t, Vec3 E, Vec3 H) { return project_em_tensor(t, {E, H}); }

}  // namespace

TEST(RotationParams, GammaAndConstraints) {
  const auto p = RotationParams::from_beta(0.6);
  EXPECT_DOUBLE_EQ(p.gamma(), 1.25);
  EXPECT_DOUBLE_EQ(p.radius(), 0.6);
  EXPECT_THROW(RotationParams::make(1.0, 1.0), PhysicsError);
  EXPECT_THROW(RotationParams::make(1.0, 2.0), PhysicsError);
  EXPECT_THROW(RotationParams::make(-1.0, 0.1), PhysicsError);
  EXPECT_THROW(RotationParams::from_beta(1.0), PhysicsError);
  EXPECT_NEAR(lorentz_gamma(0.999999), 1.0 / std::sqrt(1 - 0.999999 * 0.999999), 1e-9 * 707.1);
}

TEST(Worldline, ZeroRadiusStaysAtOrigin) {
  const auto p = RotationParams::make(1.0, 0.0);
  for (double tau : {0.0, 0.7, 13.0}) {
    const auto x = worldline_position(p, tau);
    EXPECT_EQ(x[0], 0.0);
    EXPECT_EQ(x[1], 0.0);
    EXPECT_EQ(x[2], 0.0);
    EXPECT_DOUBLE_EQ(x[3], tau);
  }
}

TEST(Worldline, StartsOnXAxis) {
  const auto p = RotationParams::from_beta(0.5);
  const auto x = worldline_position(p, 0.0);
  EXPECT_DOUBLE_EQ(x[0], 0.5);
  EXPECT_EQ(x[1], 0.0);
  EXPECT_EQ(x[3], 0.0);
}

TEST(Worldline, RadiusIsConstant) {
  Gen g(11);
  const auto p = RotationParams::make(2.0, 0.3);
  for (int i = 0; i < 1000; ++i) {
    const auto x = worldline_position(p, g.uniform(-50, 50));
    EXPECT_NEAR(norm(x.spatial()), 0.3, 1e-15);
  }
}

TEST(FourVelocity, StaticDetector) {
  const auto p = RotationParams::make(3.0, 0.0, 2.0);
  const auto u = four_velocity(p, 1.3);
  EXPECT_EQ(u[0], 0.0);
  EXPECT_EQ(u[1], 0.0);
  EXPECT_EQ(u[3], 2.0);
}

TEST(FourVelocity, NormalizationProperty) {
  Gen g(12);
  for (int i = 0; i < 500; ++i) {
    const double c = g.uniform(0.5, 3.0);
    const double omega = g.uniform(0.1, 5.0);
    const auto p = RotationParams::from_beta(g.uniform(0.0, 0.99), omega, c);
    const auto u = four_velocity(p, g.uniform(-10, 10));
    EXPECT_LT(std::abs(minkowski_dot(u, u) + c * c) / (c * c), 1e-12);
  }
}

TEST(FourAcceleration, MatchesFiniteDifferenceOfVelocity) {
  const auto p = RotationParams::from_beta(0.7, 1.5);
  const double h = 1e-3;
  for (double tau : {0.0, 0.4, 2.1}) {
    const auto a = four_acceleration(p, tau);
    const auto um2 = four_velocity(p, tau - 2 * h), um1 = four_velocity(p, tau - h);
    const auto up1 = four_velocity(p, tau + h), up2 = four_velocity(p, tau + 2 * h);
    for (int i = 0; i < 4; ++i) {
      const double fd = (um2[i] - 8 * um1[i] + 8 * up1[i] - up2[i]) / (12 * h);
      EXPECT_NEAR(a[i], fd, 1e-8);
    }
    const double mag = p.radius() * p.omega() * p.omega() * p.gamma() * p.gamma();
    EXPECT_NEAR(norm(a.spatial()), mag, 1e-14 * mag);
    EXPECT_EQ(a[3], 0.0);
  }
}

TEST(FrenetSerret, IdentityAtRest) {
  const auto t = frenet_serret_tetrad(RotationParams::from_beta(0.0), 0.0);
  for (int a = 0; a < 4; ++a) {
    for (int i = 0; i < 4; ++i) EXPECT_EQ(t.legs[a][i], a == i ? 1.0 : 0.0);
  }
}

TEST(FrenetSerret, OrthonormalOnRandomGrid) {
  Gen g(13);
  for (int i = 0; i < 1000; ++i) {
    const auto p = RotationParams::from_beta(g.uniform(0.0, 0.99));
    const double tau = g.uniform(-20, 20);
    EXPECT_LT(orthonormality_residual(frenet_serret_tetrad(p, tau)), 1e-12);
    EXPECT_LT(orthonormality_residual(fermi_walker_tetrad(p, tau)), 1e-12);
  }
}

TEST(FrenetSerret, RestConditionAndConstantAcceleration) {
  Gen g(14);
  for (int i = 0; i < 300; ++i) {
    const auto p = RotationParams::from_beta(g.uniform(0.0, 0.99), g.uniform(0.2, 3.0), g.uniform(0.5, 2.0));
    const double tau = g.uniform(-10, 10);
    const auto t = frenet_serret_tetrad(p, tau);
    const auto u = project_vector(t, four_velocity(p, tau));
    const auto a = project_vector(t, four_acceleration(p, tau));
    const double amag = p.radius() * p.omega() * p.omega() * p.gamma() * p.gamma();
    const double us = p.c() * p.gamma();
    EXPECT_LT(std::abs(u[0]) / us, 1e-12);
    EXPECT_LT(std::abs(u[1]) / us, 1e-12);
    EXPECT_LT(std::abs(u[2]) / us, 1e-12);
    EXPECT_LT(std::abs(u[3] + p.c()) / us, 1e-12);
    EXPECT_NEAR(a[0], -amag, 1e-12 * std::max(amag, 1.0));
    EXPECT_NEAR(a[1], 0.0, 1e-12 * std::max(amag, 1.0));
    EXPECT_NEAR(a[3], 0.0, 1e-12 * std::max(amag, 1.0));
  }
}

TEST(FrenetSerret, OdeResidualWithCoefficients) {
  const auto p = RotationParams::from_beta(0.6, 1.3);
  const auto k = frenet_serret_coefficients(p);
  EXPECT_DOUBLE_EQ(k.b, -0.6 * 1.3 * 1.5625);
  EXPECT_DOUBLE_EQ(k.c_tilde, 1.3 * 1.5625);
  EXPECT_EQ(k.d, 0.0);
  for (double tau : {0.0, 0.8, 3.0}) {
    const auto t = frenet_serret_tetrad(p, tau);
    const double h = 1e-3;
    FourVector r4 = sub(leg_derivative(p, tau, 3, h), t.legs[0], k.b);
    FourVector r1 = leg_derivative(p, tau, 0, h);
    for (int i = 0; i < 4; ++i) r1[i] -= k.c_tilde * t.legs[1][i] + k.b * t.legs[3][i];
    FourVector r2 = leg_derivative(p, tau, 1, h);
    for (int i = 0; i < 4; ++i) r2[i] -= k.d * t.legs[2][i] - k.c_tilde * t.legs[0][i];
    const FourVector r3 = sub(leg_derivative(p, tau, 2, h), t.legs[1], -k.d);
    EXPECT_LT(max_abs(r4), 1e-8);
    EXPECT_LT(max_abs(r1), 1e-8);
    EXPECT_LT(max_abs(r2), 1e-8);
    EXPECT_LT(max_abs(r3), 1e-8);
  }
}

TEST(FermiWalker, IdentityWhenNotRotating) {
  const auto t = fermi_walker_tetrad(RotationParams::make(0.0, 0.5), 2.0);
  for (int a = 0; a < 4; ++a) {
    for (int i = 0; i < 4; ++i) EXPECT_EQ(t.legs[a][i], a == i ? 1.0 : 0.0);
  }
}

TEST(FermiWalker, AccelerationRotatesWithConstantMagnitude) {
  const auto p = RotationParams::from_beta(0.8, 0.7);
  const double amag = p.radius() * p.omega() * p.omega() * p.gamma() * p.gamma();
  for (int i = 0; i < 100; ++i) {
    const double tau = 0.173 * i;
    const double th = p.gamma() * p.phase(tau);
    const auto a = project_vector(fermi_walker_tetrad(p, tau), four_acceleration(p, tau));
    EXPECT_NEAR(a[0], -amag * std::cos(th), 1e-12);
    EXPECT_NEAR(a[1], -amag * std::sin(th), 1e-12);
    EXPECT_NEAR(a[2], 0.0, 1e-12);
    EXPECT_NEAR(a[3], 0.0, 1e-12);
    EXPECT_NEAR(std::hypot(a[0], a[1]), amag, 1e-12);
  }
}

TEST(ProjectEm, IdentityAtRest) {
  const auto t = frenet_serret_tetrad(RotationParams::from_beta(0.0), 0.0);
  const Vec3 E{0.3, -1.2, 2.0}, H{0.5, 0.1, -0.7};
  const auto f = apply_lab(t, E, H);
  EXPECT_EQ(f.E, E);
  EXPECT_EQ(f.H, H);
}

TEST(ProjectEm, QuarterTurnSubstitution) {
  // alpha = pi/2 at tau = pi/2 for beta = 0.
  const auto t = frenet_serret_tetrad(RotationParams::from_beta(0.0), kPi / 2);
  const auto f = apply_lab(t, {1, 0, 0}, {0, 0, 0});
  EXPECT_NEAR(f.E[0], 0.0, 1e-16);
  EXPECT_NEAR(f.E[1], -1.0, 1e-16);
  EXPECT_EQ(f.E[2], 0.0);
}

TEST(ProjectEm, ClosedRowsMatchContraction) {
  Gen g(15);
  for (int i = 0; i < 300; ++i) {
    const auto p = RotationParams::from_beta(g.uniform(0, 0.99));
    const auto t = frenet_serret_tetrad(p, g.uniform(-5, 5));
    const EmFieldLab lab{{g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1)},
                         {g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1)}};
    const auto a = project_em_tensor(t, lab);
    const auto b = project_em_tensor_contraction(t, lab);
    for (int k = 0; k < 6; ++k) EXPECT_NEAR(a.component(k), b.component(k), 1e-12 * p.gamma() * p.gamma());
  }
}

TEST(ProjectEm, LorentzInvariantsPreserved) {
  Gen g(16);
  for (int i = 0; i < 300; ++i) {
    const auto p = RotationParams::from_beta(g.uniform(0, 0.95));
    const double tau = g.uniform(-5, 5);
    const EmFieldLab lab{{g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1)},
                         {g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1)}};
    for (const auto& t : {frenet_serret_tetrad(p, tau), fermi_walker_tetrad(p, tau)}) {
      const auto f = project_em_tensor_contraction(t, lab);
      const double scale = p.gamma() * p.gamma() * 3;
      EXPECT_NEAR(dot(f.E, f.E) - dot(f.H, f.H), dot(lab.E, lab.E) - dot(lab.H, lab.H), 1e-12 * scale);
      EXPECT_NEAR(dot(f.E, f.H), dot(lab.E, lab.H), 1e-12 * scale);
    }
  }
}

TEST(ProjectEm, RejectsFermiWalkerInClosedRows) {
  const auto t = fermi_walker_tetrad(RotationParams::from_beta(0.3), 0.2);
  EXPECT_THROW(project_em_tensor(t, {}), std::invalid_argument);
}

TEST(ProjectScalar, IdentityTetradReturnsT44) {
  const auto t = frenet_serret_tetrad(RotationParams::from_beta(0.0), 0.0);
  Tensor4 T{};
  T[0][0] = 1;
  T[1][1] = 2;
  T[2][2] = 3;
  T[3][3] = 7;
  T[0][3] = T[3][0] = 0.4;
  EXPECT_DOUBLE_EQ(project_scalar_energy(t, T), 7.0);
}

TEST(ProjectScalar, MatchesExplicitContraction) {
  Gen g(17);
  for (int n = 0; n < 100; ++n) {
    const auto p = RotationParams::from_beta(g.uniform(0, 0.95));
    const auto t = frenet_serret_tetrad(p, g.uniform(-4, 4));
    Tensor4 T{};
    for (int i = 0; i < 4; ++i) {
      for (int k = i; k < 4; ++k) T[i][k] = T[k][i] = g.uniform(-1, 1);
    }
    double expect = 0;
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 4; ++k) expect += t.legs[3][i] * t.legs[3][k] * T[i][k];
    }
    EXPECT_NEAR(project_scalar_energy(t, T), expect, 1e-12 * p.gamma() * p.gamma() * 16);
  }
}

TEST(ProjectScalar, IsotropicTensorGivesMaskingStructure) {
  for (double beta : {0.0, 0.3, 0.6, 0.9}) {
    const auto p = RotationParams::from_beta(beta);
    Tensor4 T{};
    T[0][0] = T[1][1] = T[2][2] = 1.0;
    T[3][3] = 3.0;
    const double g2 = p.gamma() * p.gamma();
    EXPECT_NEAR(project_scalar_energy(frenet_serret_tetrad(p, 1.1), T) / 3.0, (4 * g2 - 1) / 3.0, 1e-13 * g2);
  }
}
