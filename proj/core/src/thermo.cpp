#include "rotzp/thermo.hpp"

#include <cmath>
#include <string>

#include "rotzp/analytic_cf.hpp"
#include "rotzp/constants.hpp"
#include "rotzp/errors.hpp"
#include "rotzp/quadrature.hpp"
#include "rotzp/spectral_sums.hpp"

namespace rotzp {

namespace {

constexpr double kPi = M_PI;

void check_light_cylinder(const RotationParams& params) {
  if (params.beta() > 0.999) {
    throw LightCylinderError("beta = " + std::to_string(params.beta()) +
                             " exceeds 0.999: too close to the light cylinder r = c / Omega");
  }
}

quad::Options tight_options() {
  quad::Options o;
  o.abs_tol = 0.0;
  o.rel_tol = 1e-14;
  return o;
}

// int_0^inf x^3 / (e^x - 1) dx
double bose_x3_integral() {
  const quad::Options o = tight_options();
  const auto r = quad::integrate_half_line(
      [](double x) {
        const double e = std::exp(-x);
        return (x > 0.0 && e > 0.0) ? x * x * x * e / -std::expm1(-x) : 0.0;
      }, 0.0, o);
  if (!r.converged) throw NumericError("Planck integral did not converge");
  return r.value;
}

// hbar Omega^4 / c^3 in J/m^3
double density_unit(const RotationParams& params) {
  const double c = si::speed_of_light;
  const double w = params.omega();
  return si::hbar * w * w * w * w / (c * c * c);
}

// sum_a int dO of the diagonal EE kernel at zero lag.
double em_diagonal_angular_sum(double beta) {
  quad::Options o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-15;
  double sum = 0.0;
  for (int a = 1; a <= 3; ++a) {
    const CFComponentId id{FieldPair::EE, a, a};
    const auto r = quad::integrate_sphere(
        [&](double theta, double phi) {
          const double s = std::sin(theta);
          return angular_kernel(id, beta, 0.0, 0.0, {s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
        },
        o, 16);
    sum += r.value;
  }
  return sum;
}

const char* kDivergentNote =
    "zero-point term (1/2) hbar w^3 dw present, divergent, not evaluated";

}  // namespace

Temperature t_rot(double omega) {
  if (!(omega >= 0.0)) throw PhysicsError("t_rot: omega must be non-negative");
  return {si::hbar * omega / (2.0 * kPi * si::boltzmann)};
}

double planck_em_density(Temperature T) {
  if (T.kelvin < 0.0) throw PhysicsError("planck_em_density: negative temperature");
  const double t2 = T.kelvin * T.kelvin;
  return 4.0 * si::stefan_boltzmann * t2 * t2 / si::speed_of_light;
}

double planck_em_density_quadrature(Temperature T) {
  if (T.kelvin < 0.0) throw PhysicsError("planck_em_density_quadrature: negative temperature");
  if (T.kelvin == 0.0) return 0.0;
  const double c = si::speed_of_light;
  const double w = si::boltzmann * T.kelvin / si::hbar;
  return si::hbar / (c * c * c * kPi * kPi) * w * w * w * w * bose_x3_integral();
}

double em_masking_factor(double beta) {
  const double g = lorentz_gamma(beta);
  return 2.0 * (4.0 * g * g - 1.0) / 3.0;
}

double scalar_masking_factor(double beta) {
  const double g = lorentz_gamma(beta);
  return 2.0 * (4.0 * g * g - 1.0) / 9.0;
}

EnergyDensityReport em_density_rotating(const RotationParams& params) {
  check_light_cylinder(params);
  EnergyDensityReport rep;
  rep.field_kind = FieldKind::em;
  rep.beta = params.beta();
  rep.gamma = params.gamma();
  rep.t_rot = t_rot(params.omega());
  rep.masking_factor = em_masking_factor(params.beta());
  rep.thermal_value = rep.masking_factor * planck_em_density(rep.t_rot);
  const double unit = density_unit(params);
  rep.thermal_value_nondim = unit > 0.0 ? rep.thermal_value / unit : 0.0;
  rep.divergent_flag = kDivergentNote;

  // w = (1/8 pi) sum_a <E_(a)^2 + H_(a)^2> = (1/4 pi) sum_a <E_(a)^2>, each
  // thermal <E_(a)^2> = (1/4 pi^2) int dO kernel_aa * remainder(F_d = 0).
  const double angular = em_diagonal_angular_sum(params.beta());
  const double angular_inertial = em_diagonal_angular_sum(0.0);
  rep.assembled_factor = kDiscreteDeltaNormalization * angular / angular_inertial;

  const double remainder = s3_thermal_integral(0.0, tight_options());
  const double w_nondim = kDiscreteDeltaNormalization * angular * remainder / (4.0 * kPi * 4.0 * kPi * kPi);
  rep.spectral_thermal_value_nondim = w_nondim;
  rep.spectral_thermal_value = w_nondim * unit;
  return rep;
}

EnergyDensityReport scalar_density_rotating(const RotationParams& params) {
  check_light_cylinder(params);
  EnergyDensityReport rep;
  rep.field_kind = FieldKind::scalar;
  rep.beta = params.beta();
  rep.gamma = params.gamma();
  rep.t_rot = t_rot(params.omega());
  rep.masking_factor = scalar_masking_factor(params.beta());
  const double unit = density_unit(params);
  rep.divergent_flag = kDivergentNote;

  // Inertial reference (3 hbar / pi c^3) int w^3 / (e^{hbar w / k T_rot} - 1) dw.
  const double reference_nondim = 3.0 / kPi * bose_x3_integral() / std::pow(2.0 * kPi, 4);
  rep.thermal_value_nondim = rep.masking_factor * reference_nondim;
  rep.thermal_value = rep.thermal_value_nondim * unit;

  // Lab tensor of the discrete-spectrum thermal part: T_44 = remainder(0) / pi,
  // isotropic pressure T_ii = T_44 / 3, projected on mu_(4).
  const double t44 = s3_thermal_integral(0.0, tight_options()) / kPi;
  Tensor4 lab{};
  lab[0][0] = lab[1][1] = lab[2][2] = t44 / 3.0;
  lab[3][3] = t44;
  const double projected = project_scalar_energy(frenet_serret_tetrad(params, 0.0), lab);
  rep.assembled_factor = projected / reference_nondim;
  rep.spectral_thermal_value_nondim = projected;
  rep.spectral_thermal_value = projected * unit;
  return rep;
}

std::vector<EnergyDensityReport> density_vs_radius_sweep(double omega, std::span<const double> radii,
                                                         FieldKind field, double c) {
  const double cc = c > 0.0 ? c : si::speed_of_light;
  std::vector<EnergyDensityReport> out;
  out.reserve(radii.size());
  for (double r : radii) {
    const RotationParams p = RotationParams::make(omega, r, cc);
    out.push_back(field == FieldKind::em ? em_density_rotating(p) : scalar_density_rotating(p));
  }
  return out;
}

}  // namespace rotzp
