#include "rotzp/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rotzp/errors.hpp"

namespace rotzp {

double lorentz_gamma(double beta) {
  if (!(std::abs(beta) < 1.0)) {
    throw PhysicsError("beta must satisfy |beta| < 1 (got " + std::to_string(beta) + ")");
  }
  return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

RotationParams RotationParams::make(double omega, double radius, double c) {
  if (!std::isfinite(omega) || !std::isfinite(radius) || !std::isfinite(c)) {
    throw PhysicsError("rotation parameters must be finite");
  }
  if (omega < 0.0 || radius < 0.0) {
    throw PhysicsError("angular velocity and radius must be non-negative");
  }
  if (c <= 0.0) {
    throw PhysicsError("speed of light must be positive");
  }
  const double beta = omega * radius / c;
  if (!(beta < 1.0)) {
    throw PhysicsError("Omega * r / c must be < 1: radius is at or beyond the light cylinder (beta = " +
                       std::to_string(beta) + ")");
  }
  return RotationParams(omega, radius, c, beta, lorentz_gamma(beta));
}

RotationParams RotationParams::from_beta(double beta, double omega, double c) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw PhysicsError("beta must lie in [0, 1) (got " + std::to_string(beta) + ")");
  }
  if (!(omega > 0.0)) {
    throw PhysicsError("from_beta needs a positive angular velocity");
  }
  // Keep beta exact rather than recomputing it from omega * radius / c.
  return RotationParams(omega, beta * c / omega, c, beta, lorentz_gamma(beta));
}

double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3];
}

double orthonormality_residual(const Tetrad& tetrad) {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const double eta = (a == b) ? (a == 3 ? -1.0 : 1.0) : 0.0;
      const double r = minkowski_dot(tetrad.legs[a], tetrad.legs[b]) - eta;
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

std::array<double, 4> project_vector(const Tetrad& tetrad, const FourVector& v) {
  std::array<double, 4> out{};
  for (int a = 0; a < 4; ++a) out[a] = minkowski_dot(tetrad.legs[a], v);
  return out;
}

FourVector worldline_position(const RotationParams& params, double tau) {
  const double alpha = params.phase(tau);
  const double a = params.radius();
  return {{a * std::cos(alpha), a * std::sin(alpha), 0.0, params.c() * params.gamma() * tau}};
}

FourVector four_velocity(const RotationParams& params, double tau) {
  const double alpha = params.phase(tau);
  const double bg = params.beta() * params.gamma();
  const double c = params.c();
  return {{-c * bg * std::sin(alpha), c * bg * std::cos(alpha), 0.0, c * params.gamma()}};
}

FourVector four_acceleration(const RotationParams& params, double tau) {
  const double alpha = params.phase(tau);
  const double g = params.gamma();
  const double mag = params.radius() * params.omega() * params.omega() * g * g;
  return {{-mag * std::cos(alpha), -mag * std::sin(alpha), 0.0, 0.0}};
}

Tetrad frenet_serret_tetrad(const RotationParams& params, double tau) {
  const double alpha = params.phase(tau);
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  const double g = params.gamma();
  const double bg = params.beta() * g;

  Tetrad t;
  t.tau = tau;
  t.kind = TetradKind::frenet_serret;
  t.legs[0] = {{ca, sa, 0.0, 0.0}};
  t.legs[1] = {{-g * sa, g * ca, 0.0, bg}};
  t.legs[2] = {{0.0, 0.0, 1.0, 0.0}};
  t.legs[3] = {{-bg * sa, bg * ca, 0.0, g}};
  return t;
}

Tetrad fermi_walker_tetrad(const RotationParams& params, double tau) {
  const double alpha = params.phase(tau);
  const double g = params.gamma();
  const double bg = params.beta() * g;
  // The transported spatial legs turn by gamma * alpha relative to the lab.
  const double theta = g * alpha;
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);

  Tetrad t;
  t.tau = tau;
  t.kind = TetradKind::fermi_walker;
  t.legs[0] = {{ca * ct + g * sa * st, sa * ct - g * ca * st, 0.0, -bg * st}};
  t.legs[1] = {{ca * st - g * sa * ct, sa * st + g * ca * ct, 0.0, bg * ct}};
  t.legs[2] = {{0.0, 0.0, 1.0, 0.0}};
  t.legs[3] = {{-bg * sa, bg * ca, 0.0, g}};
  return t;
}

FrenetSerretCoefficients frenet_serret_coefficients(const RotationParams& params) {
  const double g2 = params.gamma() * params.gamma();
  return {-params.beta() * params.omega() * g2, params.omega() * g2, 0.0};
}

Tensor4 em_tensor_covariant(const EmFieldLab& field) {
  Tensor4 f{};
  for (int j = 0; j < 3; ++j) {
    f[3][j] = field.E[j];
    f[j][3] = -field.E[j];
  }
  f[1][2] = field.H.x;
  f[2][1] = -field.H.x;
  f[2][0] = field.H.y;
  f[0][2] = -field.H.y;
  f[0][1] = field.H.z;
  f[1][0] = -field.H.z;
  return f;
}

EmFieldFrame project_em_tensor(const Tetrad& tetrad, const EmFieldLab& field) {
  if (tetrad.kind != TetradKind::frenet_serret) {
    throw std::invalid_argument("project_em_tensor: closed-form rows hold for Frenet-Serret tetrads only");
  }
  // Read alpha, gamma and beta*gamma back off the legs.
  const double ca = tetrad.legs[0][0];
  const double sa = tetrad.legs[0][1];
  const double g = tetrad.legs[3][3];
  const double bg = tetrad.legs[1][3];
  const Vec3& E = field.E;
  const Vec3& H = field.H;

  EmFieldFrame out;
  out.E.x = E.x * g * ca + E.y * g * sa - H.z * bg;
  out.E.y = -E.x * sa + E.y * ca;
  out.E.z = E.z * g + H.x * bg * ca + H.y * bg * sa;
  out.H.x = H.x * g * ca + H.y * g * sa + E.z * bg;
  out.H.y = -H.x * sa + H.y * ca;
  out.H.z = H.z * g - bg * (E.x * ca + E.y * sa);
  return out;
}

namespace {

double contract(const FourVector& u, const FourVector& v, const Tensor4& t) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) s += u[i] * v[k] * t[i][k];
  }
  return s;
}

}  // namespace

EmFieldFrame project_em_tensor_contraction(const Tetrad& tetrad, const EmFieldLab& field) {
  const Tensor4 f = em_tensor_covariant(field);
  const auto& mu = tetrad.legs;
  EmFieldFrame out;
  out.E = {contract(mu[3], mu[0], f), contract(mu[3], mu[1], f), contract(mu[3], mu[2], f)};
  out.H = {contract(mu[1], mu[2], f), contract(mu[2], mu[0], f), contract(mu[0], mu[1], f)};
  return out;
}

double project_scalar_energy(const Tetrad& tetrad, const Tensor4& lab_tensor) {
  return contract(tetrad.legs[3], tetrad.legs[3], lab_tensor);
}

}  // namespace rotzp
