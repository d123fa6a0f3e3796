#include "rotzp/analytic_cf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rotzp/errors.hpp"

namespace rotzp {

namespace {

constexpr double kPi = M_PI;
constexpr double kFourPi2 = 4.0 * M_PI * M_PI;

void require_unit_interval(double v, const char* what) {
  if (!(std::abs(v) < 1.0)) {
    throw PhysicsError(std::string(what) + " must satisfy |value| < 1 (got " + std::to_string(v) + ")");
  }
}

Vec3 direction(double theta, double phi) {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

// int_0^k q^(p) cos(q x) dq for odd p in {1, 3}: power series when |k x| < 1,
// antiderivative otherwise.
double kp_cos_from_zero(int p, double x, double k) {
  const double kx = k * x;
  if (std::abs(kx) < 1.0) {
    // sum_j (-1)^j x^(2j) / (2j)! * k^(2j+p+1) / (2j+p+1)
    double term = std::pow(k, p + 1);
    double sum = term / (p + 1);
    const double x2k2 = kx * kx;
    for (int j = 1; j < 40; ++j) {
      term *= -x2k2 / ((2.0 * j - 1.0) * (2.0 * j));
      const double add = term / (2 * j + p + 1);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  const double s = std::sin(kx);
  const double c = std::cos(kx);
  if (p == 1) {
    return k * s / x + (c - 1.0) / (x * x);
  }
  const double x2 = x * x;
  const double x4 = x2 * x2;
  return k * k * k * s / x + 3.0 * k * k * c / x2 - 6.0 * k * s / (x2 * x) + 6.0 * (1.0 - c) / x4;
}

}  // namespace

double sinc_half(double x) {
  const double h = 0.5 * x;
  if (std::abs(x) < 1e-4) {
    const double h2 = h * h;
    return 1.0 - h2 / 6.0 + h2 * h2 / 120.0;
  }
  return std::sin(h) / h;
}

CFLagParams CFLagParams::make(double beta, double delta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw PhysicsError("beta must lie in [0, 1) (got " + std::to_string(beta) + ")");
  }
  if (!std::isfinite(delta)) throw PhysicsError("lag must be finite");
  CFLagParams p;
  p.delta = delta;
  p.beta = beta;
  p.gamma = lorentz_gamma(beta);
  p.kconst = -beta * sinc_half(delta);
  p.lab_dt = delta;
  return p;
}

CFLagParams CFLagParams::from_rotation(const RotationParams& params, double dtau) {
  CFLagParams p = make(params.beta(), params.omega() * params.gamma() * dtau);
  return p;
}

double theta_integral(int p, double k) {
  require_unit_interval(k, "theta_integral: k");
  const double q = (1.0 - k) * (1.0 + k);
  const double q2 = q * q;
  const double q3 = q2 * q;
  switch (p) {
    case 1:
      return 2.0 / (5.0 * q) + 8.0 / (15.0 * q2) + 16.0 / (15.0 * q3);
    case 3:
      return 4.0 / (15.0 * q2) + 16.0 / (15.0 * q3);
    case 5:
      return 16.0 / (15.0 * q3);
    default:
      throw std::invalid_argument("theta_integral: p must be 1, 3 or 5");
  }
}

double azimuthal_integral(int m, double b) {
  require_unit_interval(b, "azimuthal_integral: b");
  const double b2 = b * b;
  const double d = std::pow((1.0 - b) * (1.0 + b), 3.5);
  switch (m) {
    case 0:
      return kPi * (2.0 + 3.0 * b2) / d;
    case 1:
      return -b * kPi * (4.0 + b2) / d;
    case 2:
      return kPi * (1.0 + 4.0 * b2) / d;
    default:
      throw std::invalid_argument("azimuthal_integral: m must be 0, 1 or 2");
  }
}

double em_cf_closed_E11(const CFLagParams& lag) {
  if (lag.lab_dt == 0.0) {
    throw PhysicsError("em_cf_closed_E11: zero lag, the correlation diverges");
  }
  require_unit_interval(lag.kconst, "em_cf_closed_E11: kconst");
  const double k = lag.kconst;
  const double k2 = k * k;
  const double b = lag.beta;
  const double b2 = b * b;
  const double cd = std::cos(lag.delta);
  const double ch = std::cos(0.5 * lag.delta);
  const double ch2 = ch * ch;

  const double g1 = 2.0 * kPi * cd;
  const double g3 = 3.0 * kPi * k2 * cd - 2.0 * kPi * ch2 + 2.0 * kPi * b2 - 8.0 * kPi * b * k * ch + kPi;
  const double g5 = -3.0 * kPi * k2 * ch2 + 3.0 * kPi * b2 * k2 - 2.0 * kPi * b * k2 * k * ch + 4.0 * kPi * k2;

  const double dt2 = lag.lab_dt * lag.lab_dt;
  const double pref = 3.0 / (2.0 * kPi * kPi * dt2 * dt2);
  return pref * lag.gamma * lag.gamma *
         (g1 * theta_integral(1, k) + g3 * theta_integral(3, k) + g5 * theta_integral(5, k));
}

Mat6 projection_map(double beta, double alpha) {
  const double g = lorentz_gamma(beta);
  const double bg = beta * g;
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  Mat6 L{};
  L[0] = {g * c, g * s, 0.0, 0.0, 0.0, -bg};
  L[1] = {-s, c, 0.0, 0.0, 0.0, 0.0};
  L[2] = {0.0, 0.0, g, bg * c, bg * s, 0.0};
  L[3] = {0.0, 0.0, bg, g * c, g * s, 0.0};
  L[4] = {0.0, 0.0, 0.0, -s, c, 0.0};
  L[5] = {-bg * c, -bg * s, 0.0, 0.0, 0.0, g};
  return L;
}

Mat6 polarization_sum(const Vec3& k) {
  Mat6 P{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double t = (i == j ? 1.0 : 0.0) - k[i] * k[j];
      P[i][j] = t;
      P[i + 3][j + 3] = t;
    }
  }
  // sum_lambda eps_i (k x eps)_j = e_ijm k_m
  const double m01 = k.z;
  const double m12 = k.x;
  const double m20 = k.y;
  P[0][4] = m01;
  P[1][3] = -m01;
  P[1][5] = m12;
  P[2][4] = -m12;
  P[2][3] = m20;
  P[0][5] = -m20;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) P[j + 3][i] = P[i][j + 3];
  }
  return P;
}

double angular_kernel(const CFComponentId& component, double beta, double delta, double central_alpha,
                      const Vec3& k_hat) {
  if (component.pair == FieldPair::SS) return 1.0;
  const Mat6 L1 = projection_map(beta, central_alpha - 0.5 * delta);
  const Mat6 L2 = projection_map(beta, central_alpha + 0.5 * delta);
  const Mat6 P = polarization_sum(k_hat);
  const auto& row1 = L1[component.first_slot()];
  const auto& row2 = L2[component.second_slot()];
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) {
    if (row1[i] == 0.0) continue;
    double inner = 0.0;
    for (int j = 0; j < 6; ++j) inner += P[i][j] * row2[j];
    sum += row1[i] * inner;
  }
  return sum;
}

double lag_phase(double beta, double delta, double central_alpha, const Vec3& k_hat) {
  const double a1 = central_alpha - 0.5 * delta;
  const double a2 = central_alpha + 0.5 * delta;
  const Vec3 dr{beta * (std::cos(a2) - std::cos(a1)), beta * (std::sin(a2) - std::sin(a1)), 0.0};
  return delta - dot(k_hat, dr);
}

double k3_cos_full(double x) {
  if (x == 0.0) throw PhysicsError("k3_cos_full: zero argument, the integral diverges");
  const double x2 = x * x;
  return 6.0 / (x2 * x2);
}

double k3_cos_band(double x, double k_min, double k_max) {
  return kp_cos_from_zero(3, x, k_max) - kp_cos_from_zero(3, x, k_min);
}

double k1_cos_band(double x, double k_min, double k_max) {
  return kp_cos_from_zero(1, x, k_max) - kp_cos_from_zero(1, x, k_min);
}

double k3_cos_damped_numeric(double x, double eps, const quad::Options& opts) {
  if (!(eps > 0.0)) throw std::invalid_argument("k3_cos_damped_numeric: eps must be positive");
  const double upper = 80.0 / eps;
  // Half a period per initial panel.
  const int panels = std::max(4, static_cast<int>(std::ceil(upper * std::abs(x) / kPi)));
  quad::Options o = opts;
  o.max_panels = std::max(o.max_panels, 8 * panels);
  const auto r = quad::integrate(
      [x, eps](double k) { return k * k * k * std::cos(k * x) * std::exp(-eps * k); }, 0.0, upper, o, panels);
  if (!r.converged) throw NumericError("k3_cos_damped_numeric: quadrature did not converge");
  return r.value;
}

quad::Extrapolation k3_cos_abel_limit(double x) {
  const double ax = std::abs(x);
  if (ax == 0.0) throw PhysicsError("k3_cos_abel_limit: zero argument");
  const double us[] = {0.2, 0.1, 0.05, 0.025};
  double eps[4];
  double vals[4];
  quad::Options o;
  o.abs_tol = 0.0;
  o.rel_tol = 1e-13;
  for (int i = 0; i < 4; ++i) {
    eps[i] = us[i] * ax;
    vals[i] = k3_cos_damped_numeric(x, eps[i], o);
  }
  return quad::extrapolate_to_zero(eps, vals, 2);
}

quad::Result em_cf_quadrature_result(const CFComponentId& component, const CFLagParams& lag,
                                     const CFQuadratureConfig& config) {
  if (!config.band && lag.lab_dt == 0.0) {
    throw PhysicsError("em_cf_quadrature: zero lag on the full spectrum diverges");
  }
  if (config.band && !(config.band->k_min >= 0.0 && config.band->k_max > config.band->k_min)) {
    throw std::invalid_argument("em_cf_quadrature: empty band");
  }
  const bool scalar = component.pair == FieldPair::SS;
  auto integrand = [&](double theta, double phi) {
    const Vec3 k = direction(theta, phi);
    const double f = lag_phase(lag.beta, lag.delta, config.central_alpha, k);
    double radial;
    if (config.band) {
      radial = scalar ? k1_cos_band(f, config.band->k_min, config.band->k_max)
                      : k3_cos_band(f, config.band->k_min, config.band->k_max);
    } else {
      radial = scalar ? -1.0 / (f * f) : k3_cos_full(f);
    }
    return angular_kernel(component, lag.beta, lag.delta, config.central_alpha, k) * radial / kFourPi2;
  };
  quad::Result r = quad::integrate_sphere(integrand, config.opts, config.min_phi_nodes);
  if (!r.converged) {
    throw NumericError("em_cf_quadrature: " + component.name() + " missed tolerance (error estimate " +
                       std::to_string(r.error) + ")");
  }
  return r;
}

double em_cf_quadrature(const CFComponentId& component, const CFLagParams& lag, const CFQuadratureConfig& config) {
  return em_cf_quadrature_result(component, lag, config).value;
}

double em_cf_hh_eh(const CFComponentId& component, const CFLagParams& lag, const CFQuadratureConfig& config) {
  if (component.pair != FieldPair::HH && component.pair != FieldPair::EH) {
    throw std::invalid_argument("em_cf_hh_eh: component must be HH or EH");
  }
  return em_cf_quadrature(component, lag, config);
}

double scalar_cf_closed(const RotationParams& params, double dtau) {
  if (dtau == 0.0) throw PhysicsError("scalar_cf_closed: zero lag is a pole");
  const double c = params.c();
  const double b = c * params.gamma() * dtau;
  const double s = std::sin(0.5 * params.omega() * params.gamma() * dtau);
  const double r = params.radius();
  return -c / (kPi * (b * b - 4.0 * r * r * s * s));
}

double scalar_cf_quadrature(const RotationParams& params, double dtau, const quad::Options& opts) {
  if (dtau == 0.0) throw PhysicsError("scalar_cf_quadrature: zero lag is a pole");
  const double c = params.c();
  const double b = std::abs(c * params.gamma() * dtau);
  const double e0 = 2.0 * params.radius() * std::sin(0.5 * params.omega() * params.gamma() * dtau);
  auto f = [&](double theta) {
    const double s = std::sin(theta);
    const double e = e0 * s;
    const double d = (b - e) * (b + e);
    return s * 2.0 * kPi * b / (d * std::sqrt(d));
  };
  const auto r = quad::integrate(f, 0.0, kPi, opts, 2);
  if (!r.converged) throw NumericError("scalar_cf_quadrature: quadrature did not converge");
  return -c * r.value / kFourPi2;
}

double scalar_cf_band(const CFLagParams& lag, const Band& band, const CFQuadratureConfig& config) {
  CFQuadratureConfig c = config;
  c.band = band;
  return em_cf_quadrature({FieldPair::SS, 1, 1}, lag, c);
}

}  // namespace rotzp
