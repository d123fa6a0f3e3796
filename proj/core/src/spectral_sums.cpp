#include "rotzp/spectral_sums.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "rotzp/errors.hpp"

namespace rotzp {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kFourPi2 = 4.0 * M_PI * M_PI;

double distance_to_lattice(double F) {
  const double m = std::round(F / kTwoPi);
  return std::abs(F - m * kTwoPi);
}

void require_off_lattice(double F, const char* who) {
  if (distance_to_lattice(F) < 1e-12 * std::max(1.0, std::abs(F))) {
    throw PhysicsError(std::string(who) + ": F_d = " + std::to_string(F) + " lies on a pole (2 pi Z)");
  }
}

// sum_j F^(2j)/(2j)! * 2 (p+2j)! zeta(p+1+2j) / (2 pi)^(p+1+2j)
double thermal_series(int p, double F) {
  const double x2 = (F / kTwoPi) * (F / kTwoPi);
  double sum = 0.0;
  double xp = 1.0;
  for (int j = 0; j < 60; ++j) {
    const double coeff = 2.0 * boost::math::factorial<double>(p + 2 * j) /
                         boost::math::factorial<double>(2 * j) * boost::math::zeta(static_cast<double>(p + 1 + 2 * j)) /
                         std::pow(kTwoPi, p + 1);
    const double add = coeff * xp;
    sum += add;
    if (j > 2 && std::abs(add) < 1e-18 * std::abs(sum)) break;
    xp *= x2;
  }
  return sum;
}

// 2 int_0^inf t^p cosh(t F) / (e^{2 pi t} - 1) dt written with decaying exponentials.
double planck_cosh_integral(int p, double F, const quad::Options& opts) {
  const double a = std::abs(F);
  if (!(a < kTwoPi)) {
    throw PhysicsError("thermal integral diverges for |F_d| >= 2 pi (got " + std::to_string(F) + ")");
  }
  auto f = [p, a](double t) {
    const double lead = std::exp(-t * (kTwoPi - a));
    if (t <= 0.0 || lead == 0.0) return 0.0;
    const double denom = -std::expm1(-kTwoPi * t);
    const double tp = std::pow(t, p);
    return tp * (lead + std::exp(-t * (kTwoPi + a))) / denom;
  };
  const auto r = quad::integrate_half_line(f, 0.0, opts);
  if (!r.converged) throw NumericError("thermal integral did not converge at F_d = " + std::to_string(F));
  return r.value;
}

struct SphereSum {
  double value = 0.0;
  double error = 0.0;
  int perturbed = 0;
};

// (1/4 pi^2) int dO kernel(k_hat) * summand(F_d), moving nodes that land within
// 1e-6 of a summand pole by half the coarsest phi step.
template <class Kernel, class Summand>
SphereSum discrete_sphere(double beta, double delta, const DiscreteConfig& config, Kernel kernel, Summand summand,
                          bool pole_at_zero) {
  SphereSum out;
  const double shift = M_PI / config.min_phi_nodes;
  auto g = [&](double theta, double phi) {
    PhaseArg pa = PhaseArg::make(beta, delta, theta, phi);
    const bool near_pole = pole_at_zero ? distance_to_lattice(pa.F_d) < 1e-6
                                        : (std::abs(pa.F_d) > 1e-6 && distance_to_lattice(pa.F_d) < 1e-6);
    if (near_pole) {
      ++out.perturbed;
      pa = PhaseArg::make(beta, delta, theta, phi + shift);
    }
    const double s = std::sin(pa.theta);
    const Vec3 k{s * std::cos(pa.phi), s * std::sin(pa.phi), std::cos(pa.theta)};
    return kernel(k) * summand(pa.F_d) / kFourPi2;
  };
  const auto r = quad::integrate_sphere(g, config.opts, config.min_phi_nodes);
  if (!r.converged) {
    throw NumericError("discrete correlation quadrature missed tolerance (error estimate " + std::to_string(r.error) +
                       ")");
  }
  out.value = r.value;
  out.error = r.error;
  return out;
}

}  // namespace

AbelPlanaResult abel_plana(const ComplexFn& f, int max_terms) {
  AbelPlanaResult res;
  quad::Options opts;
  opts.abs_tol = 1e-14;
  opts.rel_tol = 1e-13;

  double sum = 0.0;
  double comp = 0.0;
  int quiet = 0;
  int n = 0;
  for (; n < max_terms; ++n) {
    const double term = f(std::complex<double>(n, 0.0)).real();
    // Neumaier compensated summation.
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    quiet = std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum)) ? quiet + 1 : 0;
    if (n > 16 && quiet >= 8) break;
  }
  if (n >= max_terms) throw NumericError("abel_plana: direct sum did not converge");
  res.sum_direct = sum + comp;
  res.terms = n + 1;

  // exp-sinh samples abscissas far beyond where a decaying f underflows; a
  // non-finite value there (inf * 0) is taken as the zero it approximates.
  auto far_zero = [](double x, double v) { return std::isfinite(v) || x < 1e3 ? v : 0.0; };
  const auto integral =
      quad::integrate_half_line([&](double x) { return far_zero(x, f({x, 0.0}).real()); }, 0.0, opts);
  if (!integral.converged) throw NumericError("abel_plana: integral part did not converge");
  res.integral_part = integral.value;
  res.half_f0 = 0.5 * f({0.0, 0.0}).real();

  // i (f(it) - f(-it)) = -2 Im f(it) for f real on the real axis.
  auto corr = [&](double t) {
    const double tt = t > 0.0 ? t : 1e-300;
    const std::complex<double> d = f({0.0, tt}) - f({0.0, -tt});
    const std::complex<double> v = std::complex<double>(0.0, 1.0) * d / std::expm1(kTwoPi * tt);
    return far_zero(t, v.real());
  };
  const auto correction = quad::integrate_half_line(corr, 0.0, opts);
  if (!correction.converged) throw NumericError("abel_plana: correction part did not converge");
  res.correction_part = correction.value;
  return res;
}

SpectralSplit s3_closed(double F) {
  if (F == 0.0) throw PhysicsError("s3_closed: F_d = 0, the 6/F^4 term diverges");
  require_off_lattice(F, "s3_closed");
  const double s = std::sin(0.5 * F);
  const double s2 = s * s;
  const double total = (3.0 - 2.0 * s2) / (8.0 * s2 * s2);
  const double f2 = F * F;
  SpectralSplit out;
  out.F_d = F;
  out.divergent = {3, 6.0 / (f2 * f2)};
  out.thermal_part = std::abs(F) < 1.0 ? thermal_series(3, F) : total - out.divergent.finite_lag_value;
  return out;
}

double s3_thermal_remainder(double F) {
  if (std::abs(F) < 1.0) return thermal_series(3, F);
  return s3_closed(F).thermal_part;
}

double s3_thermal_integral(double F, const quad::Options& opts) {
  return planck_cosh_integral(3, F, opts);
}

double s3_alt_series(double F, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("s3_alt_series: n_terms must be >= 1");
  if (F == 0.0) throw PhysicsError("s3_alt_series: F_d = 0 is a pole");
  require_off_lattice(F, "s3_alt_series");
  const double x = F / kTwoPi;
  if (!(n_terms > 2.0 * std::abs(x) + 1.0)) {
    throw std::invalid_argument("s3_alt_series: n_terms too small for the tail expansion at this F_d");
  }
  const double c = 6.0 / std::pow(kTwoPi, 4);
  double sum = 0.0;
  for (int n = n_terms; n >= 1; --n) {
    const double u = x / n;
    const double a = 1.0 + u;
    const double b = 1.0 - u;
    const double n4 = static_cast<double>(n) * n * n * n;
    sum += (1.0 / (a * a * a * a) + 1.0 / (b * b * b * b)) / n4;
  }
  // Tail: (1+u)^-4 + (1-u)^-4 = 2 + 20u^2 + 70u^4 + 168u^6 + ..., each power of n
  // summed beyond n_terms by Euler-Maclaurin.
  auto zeta_tail = [N = static_cast<double>(n_terms)](int s) {
    return std::pow(N, 1 - s) / (s - 1) - 0.5 * std::pow(N, -s) + s * std::pow(N, -s - 1) / 12.0 -
           s * (s + 1.0) * (s + 2.0) * std::pow(N, -s - 3) / 720.0;
  };
  const double x2 = x * x;
  const double tail = 2.0 * zeta_tail(4) + 20.0 * x2 * zeta_tail(6) + 70.0 * x2 * x2 * zeta_tail(8) +
                      168.0 * x2 * x2 * x2 * zeta_tail(10);
  const double f2 = F * F;
  return 6.0 / (f2 * f2) + c * (sum + tail);
}

SpectralSplit s1_sum(double F) {
  if (F == 0.0) throw PhysicsError("s1_sum: F_d = 0, the -1/F^2 term diverges");
  require_off_lattice(F, "s1_sum");
  SpectralSplit out;
  out.F_d = F;
  out.divergent = {1, -1.0 / (F * F)};
  out.thermal_part = s1_thermal_integral(F);
  return out;
}

double s1_thermal_integral(double F, const quad::Options& opts) {
  return -planck_cosh_integral(1, F, opts);
}

double s1_thermal_remainder(double F) {
  if (std::abs(F) < 1.0) return -thermal_series(1, F);
  require_off_lattice(F, "s1_thermal_remainder");
  const double s = std::sin(0.5 * F);
  return -1.0 / (4.0 * s * s) + 1.0 / (F * F);
}

double abel_damped_sum(int p, double F, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("abel_damped_sum: eps must be positive");
  if (p < 0) throw std::invalid_argument("abel_damped_sum: p must be >= 0");
  // Stop once n^p e^{-eps n} is below 1e-20 of its peak value.
  const double peak_n = std::max(1.0, p / eps);
  const double log_peak = p * std::log(peak_n) - eps * peak_n;
  double sum = 0.0;
  double comp = 0.0;
  for (long n = 1;; ++n) {
    const double log_mag = p * std::log(static_cast<double>(n)) - eps * n;
    if (n > peak_n && log_mag < log_peak - 46.0) break;
    const double term = std::exp(log_mag) * std::cos(n * F);
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

quad::Extrapolation abel_regularized_limit(int p, double F) {
  const double eps[] = {0.2, 0.1, 0.05, 0.025, 0.0125};
  double vals[5];
  for (int i = 0; i < 5; ++i) vals[i] = abel_damped_sum(p, F, eps[i]);
  return quad::extrapolate_to_zero(eps, vals, 2);
}

double truncated_sum(int p, double F, int n_max) {
  double sum = 0.0;
  for (int n = n_max; n >= 1; --n) sum += std::pow(static_cast<double>(n), p) * std::cos(n * F);
  return sum;
}

PhaseArg PhaseArg::make(double beta, double delta, double theta, double phi) {
  PhaseArg pa;
  pa.theta = theta;
  pa.phi = phi;
  pa.F_d = delta - 2.0 * beta * std::sin(0.5 * delta) * std::sin(theta) * std::sin(phi);
  return pa;
}

DiscreteCFResult discrete_em_cf_E11(const CFLagParams& lag, const DiscreteConfig& config) {
  const double b = lag.beta;
  const double g2 = lag.gamma * lag.gamma;
  const double cd = std::cos(lag.delta);
  const double ch = std::cos(0.5 * lag.delta);
  const double sh = std::sin(0.5 * lag.delta);
  auto kernel = [=](const Vec3& k) {
    return g2 * (cd + 2.0 * b * ch * k.y + (b * b - ch * ch) * k.x * k.x + (b * b + sh * sh) * k.y * k.y);
  };
  const auto total = discrete_sphere(b, lag.delta, config, kernel, [](double F) { return s3_closed(F).total(); },
                                     true);
  const auto thermal = discrete_sphere(b, lag.delta, config, kernel, s3_thermal_remainder, false);
  DiscreteCFResult out;
  out.total = {total.value, 0.0, Method::discrete_sum};
  out.thermal = {thermal.value, 0.0, Method::discrete_sum};
  out.quadrature_error = std::max(total.error, thermal.error);
  out.perturbed_nodes = total.perturbed + thermal.perturbed;
  return out;
}

DiscreteCFResult discrete_em_cf(const CFComponentId& component, const CFLagParams& lag,
                                const DiscreteConfig& config) {
  if (component.pair == FieldPair::SS) return discrete_scalar_cf(lag, config);
  auto kernel = [&](const Vec3& k) { return angular_kernel(component, lag.beta, lag.delta, 0.0, k); };
  const auto total = discrete_sphere(lag.beta, lag.delta, config, kernel,
                                     [](double F) { return s3_closed(F).total(); }, true);
  const auto thermal = discrete_sphere(lag.beta, lag.delta, config, kernel, s3_thermal_remainder, false);
  DiscreteCFResult out;
  out.total = {total.value, 0.0, Method::discrete_sum};
  out.thermal = {thermal.value, 0.0, Method::discrete_sum};
  out.quadrature_error = std::max(total.error, thermal.error);
  out.perturbed_nodes = total.perturbed + thermal.perturbed;
  return out;
}

DiscreteCFResult discrete_scalar_cf(const CFLagParams& lag, const DiscreteConfig& config) {
  auto kernel = [](const Vec3&) { return 1.0; };
  auto s1_total = [](double F) {
    require_off_lattice(F, "discrete_scalar_cf");
    const double s = std::sin(0.5 * F);
    return -1.0 / (4.0 * s * s);
  };
  const auto total = discrete_sphere(lag.beta, lag.delta, config, kernel, s1_total, true);
  const auto thermal = discrete_sphere(lag.beta, lag.delta, config, kernel, s1_thermal_remainder, false);
  DiscreteCFResult out;
  out.total = {total.value, 0.0, Method::discrete_sum};
  out.thermal = {thermal.value, 0.0, Method::discrete_sum};
  out.quadrature_error = std::max(total.error, thermal.error);
  out.perturbed_nodes = total.perturbed + thermal.perturbed;
  return out;
}

double discrete_cf_truncated(const CFComponentId& component, const CFLagParams& lag, int n_max,
                             const DiscreteConfig& config) {
  if (n_max < 1) throw std::invalid_argument("discrete_cf_truncated: n_max must be >= 1");
  const int p = component.pair == FieldPair::SS ? 1 : 3;
  auto kernel = [&](const Vec3& k) { return angular_kernel(component, lag.beta, lag.delta, 0.0, k); };
  DiscreteConfig c = config;
  c.min_phi_nodes = std::max(config.min_phi_nodes, 4 * n_max);
  auto summand = [p, n_max](double F) { return truncated_sum(p, F, n_max); };
  auto g = [&](double theta, double phi) {
    const PhaseArg pa = PhaseArg::make(lag.beta, lag.delta, theta, phi);
    const double s = std::sin(theta);
    const Vec3 k{s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
    return kernel(k) * summand(pa.F_d) / kFourPi2;
  };
  const auto r = quad::integrate_sphere(g, c.opts, c.min_phi_nodes);
  if (!r.converged) throw NumericError("discrete_cf_truncated: quadrature missed tolerance");
  return r.value;
}

}  // namespace rotzp
