#include "rotzp/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "rotzp/analytic_cf.hpp"
#include "rotzp/constants.hpp"
#include "rotzp/kinematics.hpp"
#include "rotzp/spectral_sums.hpp"
#include "rotzp/stochastic_field.hpp"
#include "rotzp/thermo.hpp"

namespace rotzp {

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

class Collector {
 public:
  explicit Collector(double scale) : scale_(scale) {}

  void add(const char* module, const char* name, double residual, double tolerance) {
    const double tol = tolerance * scale_;
    report_.checks.push_back({module, name, residual, tol, residual <= tol});
  }

  ValidationReport take() { return std::move(report_); }

 private:
  double scale_;
  ValidationReport report_;
};

void kinematics_checks(Collector& out) {
  double ortho = 0.0;
  double rest = 0.0;
  double fs_acc = 0.0;
  double fw_acc = 0.0;
  double invariants = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double beta = 0.099 * i;
    const RotationParams p = RotationParams::from_beta(beta);
    const double g2 = p.gamma() * p.gamma();
    const double amag = p.radius() * g2;
    for (int j = 0; j < 10; ++j) {
      const double tau = -7.0 + 1.7 * j;
      const Tetrad fs = frenet_serret_tetrad(p, tau);
      const Tetrad fw = fermi_walker_tetrad(p, tau);
      ortho = std::max({ortho, orthonormality_residual(fs), orthonormality_residual(fw)});
      const auto u = project_vector(fs, four_velocity(p, tau));
      rest = std::max({rest, std::abs(u[0]), std::abs(u[1]), std::abs(u[2]), std::abs(u[3] + 1.0)});
      const auto a = project_vector(fs, four_acceleration(p, tau));
      fs_acc = std::max({fs_acc, std::abs(a[0] + amag), std::abs(a[1]), std::abs(a[2]), std::abs(a[3])});
      const auto b = project_vector(fw, four_acceleration(p, tau));
      const double th = p.gamma() * p.phase(tau);
      fw_acc = std::max({fw_acc, std::abs(b[0] + amag * std::cos(th)), std::abs(b[1] + amag * std::sin(th)),
                         std::abs(b[2]), std::abs(b[3])});
      const EmFieldLab f{{0.3 - 0.1 * j, 0.7, -0.2 * i}, {0.5, -0.4 + 0.05 * j, 0.9}};
      const EmFieldFrame q = project_em_tensor(fs, f);
      const double i1 = dot(f.E, f.E) - dot(f.H, f.H);
      const double i2 = dot(f.E, f.H);
      invariants = std::max({invariants, std::abs(dot(q.E, q.E) - dot(q.H, q.H) - i1), std::abs(dot(q.E, q.H) - i2)});
    }
  }
  out.add("kinematics", "tetrad orthonormality", ortho, 1e-12);
  out.add("kinematics", "rest condition", rest, 1e-12);
  out.add("kinematics", "frenet-serret acceleration", fs_acc, 1e-12);
  out.add("kinematics", "fermi-walker acceleration", fw_acc, 1e-12);
  out.add("kinematics", "field invariants under projection", invariants, 1e-12);
}

void analytic_checks(Collector& out, const ValidationOptions& opt) {
  double th = 0.0;
  double az = 0.0;
  quad::Options o;
  o.abs_tol = 0.0;
  o.rel_tol = 1e-13;
  for (double k : {0.0, 0.5, 0.9}) {
    for (int p : {1, 3, 5}) {
      const auto r = quad::integrate(
          [&](double t) {
            const double s = std::sin(t);
            return std::pow(s, p) * std::pow(1.0 - k * k * s * s, -3.5);
          },
          0.0, M_PI, o, 4);
      th = std::max(th, rel(theta_integral(p, k), r.value));
    }
    for (int m : {0, 1, 2}) {
      const auto r = quad::integrate_periodic(
          [&](double phi) { return std::pow(std::sin(phi), m) * std::pow(1.0 + k * std::sin(phi), -4.0); }, 0.0,
          2.0 * M_PI, o, 16);
      const double exact = azimuthal_integral(m, k);
      az = std::max(az, std::abs(exact) > 0.0 ? rel(exact, r.value) : std::abs(r.value));
    }
  }
  out.add("analytic_cf", "theta integrals closed vs quadrature", th, 1e-10);
  out.add("analytic_cf", "azimuthal integrals closed vs quadrature", az, 1e-10);

  double abel = 0.0;
  for (double x : {0.3, 3.0}) abel = std::max(abel, rel(k3_cos_abel_limit(x).value, 6.0 / std::pow(x, 4)));
  out.add("analytic_cf", "Abel-regularized k^3 cos integral", abel, 1e-6);

  double e11 = 0.0;
  for (double beta : {0.0, 0.6, 0.9}) {
    for (double delta : {0.1, 1.0, 6.0}) {
      const CFLagParams lag = CFLagParams::make(beta, delta);
      e11 = std::max(e11, rel(em_cf_closed_E11(lag), em_cf_quadrature({FieldPair::EE, 1, 1}, lag)));
    }
  }
  out.add("analytic_cf", "E11 closed form vs quadrature", e11, 1e-8);

  double sc = 0.0;
  for (double beta : {0.0, 0.5, 0.95}) {
    const RotationParams p = RotationParams::from_beta(beta);
    for (double dtau : {0.05, 1.0, 4.0}) sc = std::max(sc, rel(scalar_cf_closed(p, dtau), scalar_cf_quadrature(p, dtau)));
  }
  out.add("analytic_cf", "scalar closed form vs quadrature", sc, 1e-10);

  // Band-limited MC against quadrature at one point, as a z-score.
  McConfig mc;
  mc.spectrum.k_min = 0.5;
  mc.spectrum.k_max = 1.5;
  mc.n_modes = 48;
  mc.n_realizations = opt.realizations;
  mc.seed = opt.seed;
  const RotationParams p = RotationParams::from_beta(0.5);
  const double dtau = 0.8;
  const CFValue v = mc_correlation({FieldPair::EE, 1, 1}, p, 0.0, dtau, mc);
  CFQuadratureConfig qc;
  qc.band = Band{0.5, 1.5};
  const double q = em_cf_quadrature({FieldPair::EE, 1, 1}, CFLagParams::from_rotation(p, dtau), qc);
  out.add("stochastic_field", "band-limited MC vs quadrature (z-score)", std::abs(v.value - q) / v.std_error, 4.0);
}

void spectral_checks(Collector& out) {
  const auto ap = abel_plana([](std::complex<double> z) { return std::exp(-z); });
  out.add("spectral_sums", "Abel-Plana on exp(-x)",
          std::max(rel(ap.formula(), ap.sum_direct), rel(ap.sum_direct, 1.0 / (1.0 - std::exp(-1.0)))), 1e-10);

  double alt = 0.0;
  for (double F : {0.5, 1.0, 3.0, 5.5}) alt = std::max(alt, rel(s3_alt_series(F, 10000), s3_closed(F).total()));
  out.add("spectral_sums", "S_d closed vs partial fractions", alt, 1e-10);

  double reg = 0.0;
  for (double F : {1.0, 2.0, 3.0}) {
    reg = std::max(reg, std::abs(abel_regularized_limit(3, F).value - s3_closed(F).total()));
    const double s = std::sin(0.5 * F);
    reg = std::max(reg, std::abs(abel_regularized_limit(1, F).value + 1.0 / (4.0 * s * s)));
  }
  out.add("spectral_sums", "Abel-regularized sums vs closed totals", reg, 1e-6);
  out.add("spectral_sums", "thermal remainder at F_d = 0", std::abs(s3_thermal_integral(0.0) - 1.0 / 120.0), 1e-10);

  const CFLagParams a = CFLagParams::make(0.6, 1.0);
  const CFLagParams b = CFLagParams::make(0.6, 1.0 + 2.0 * M_PI);
  const double va = discrete_em_cf_E11(a).total.value;
  const double vb = discrete_em_cf_E11(b).total.value;
  out.add("spectral_sums", "discrete E11 periodicity", rel(vb, va), 1e-10);
}

void thermo_checks(Collector& out) {
  const double lhs = 4.0 * si::stefan_boltzmann / si::speed_of_light;
  const double k = si::boltzmann;
  const double rhs = M_PI * M_PI * k * k * k * k /
                     (15.0 * si::hbar * si::hbar * si::hbar * si::speed_of_light * si::speed_of_light *
                      si::speed_of_light);
  out.add("thermo", "4 sigma / c identity", rel(lhs, rhs), 4e-16);
  out.add("thermo", "Stefan-Boltzmann vs CODATA", rel(si::stefan_boltzmann, si::stefan_boltzmann_codata), 1e-9);

  const Temperature t{300.0};
  out.add("thermo", "Planck density closed vs quadrature", rel(planck_em_density_quadrature(t), planck_em_density(t)),
          1e-10);

  double factor = 0.0;
  double spectral = 0.0;
  double ratio = 0.0;
  for (double beta : {0.0, 0.3, 0.6, 0.9, 0.99}) {
    const RotationParams p = RotationParams::make(1.0e3, beta * si::speed_of_light / 1.0e3, si::speed_of_light);
    const auto em = em_density_rotating(p);
    const auto sc = scalar_density_rotating(p);
    factor = std::max({factor, rel(em.assembled_factor, em.masking_factor),
                       rel(sc.assembled_factor, sc.masking_factor)});
    spectral = std::max({spectral, rel(em.spectral_thermal_value, em.thermal_value),
                         rel(sc.spectral_thermal_value, sc.thermal_value)});
    ratio = std::max(ratio, std::abs(em.masking_factor / sc.masking_factor - 3.0));
  }
  out.add("thermo", "masking factors from independent assembly", factor, 1e-12);
  out.add("thermo", "thermal density through spectral sums", spectral, 1e-8);
  out.add("thermo", "em / scalar factor ratio", ratio, 1e-14);
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport run_validation(const ValidationOptions& options) {
  Collector out(options.tolerance_scale);
  kinematics_checks(out);
  analytic_checks(out, options);
  spectral_checks(out);
  thermo_checks(out);
  return out.take();
}

}  // namespace rotzp
