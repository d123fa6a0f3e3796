#pragma once

// Continuous-spectrum correlation functions of the projected fields, computed by
// angular quadrature of the general two-point kernel and, for <E_(1)E_(1)> and
// the scalar field, in elementary closed form.
//
// Units: hbar = c = Omega = 1, so k0 = 1, the radius equals beta and the lab time
// lag equals delta. EM correlations are in units of hbar c k0^4, scalar ones in
// hbar c k0^2.

#include <array>
#include <optional>

#include "rotzp/correlation.hpp"
#include "rotzp/kinematics.hpp"
#include "rotzp/quadrature.hpp"
#include "rotzp/vec3.hpp"

namespace rotzp {

// sin(x/2) / (x/2), with a series below |x| < 1e-4.
double sinc_half(double x);

struct CFLagParams {
  double delta = 0.0;   // Omega gamma (tau2 - tau1)
  double beta = 0.0;
  double gamma = 1.0;
  double kconst = 0.0;  // -beta sin(delta/2) / (delta/2)
  double lab_dt = 0.0;  // c (t2 - t1) in units of 1/k0

  // Throws PhysicsError unless 0 <= beta < 1.
  static CFLagParams make(double beta, double delta);
  static CFLagParams from_rotation(const RotationParams& params, double dtau);
};

// int_0^pi sin^p(theta) (1 - k^2 sin^2 theta)^(-7/2) dtheta for p = 1, 3, 5.
double theta_integral(int p, double k);
// int_0^2pi sin^m(phi) (1 + b sin phi)^(-4) dphi for m = 0, 1, 2.
double azimuthal_integral(int m, double b);

double em_cf_closed_E11(const CFLagParams& lag);

using Mat6 = std::array<std::array<double, 6>, 6>;

// Frenet-Serret projection as a linear map on (E, H): frame = L lab.
Mat6 projection_map(double beta, double alpha);
// Sum over both polarizations of g g^T with g = (eps, k_hat x eps).
Mat6 polarization_sum(const Vec3& k_hat);

// [L(alpha1) P(k_hat) L(alpha2)^T]_ab for the two endpoints of the lag placed
// symmetrically about central_alpha.
double angular_kernel(const CFComponentId& component, double beta, double delta, double central_alpha,
                      const Vec3& k_hat);
// Phase factor F = lab_dt - k_hat . (r2 - r1) multiplying k in cos(k F).
double lag_phase(double beta, double delta, double central_alpha, const Vec3& k_hat);

// Radial integrals. Full spectrum: int_0^inf k^3 cos(k x) dk = 6 / x^4 taken as
// the Abel limit. Band: the same integral over [k_min, k_max].
double k3_cos_full(double x);
double k3_cos_band(double x, double k_min, double k_max);
double k1_cos_band(double x, double k_min, double k_max);

// int_0^inf k^3 cos(k x) exp(-eps k) dk by direct quadrature.
double k3_cos_damped_numeric(double x, double eps, const quad::Options& opts = {});
// eps -> 0 limit of the above by Neville extrapolation in eps^2 on eps = u x.
quad::Extrapolation k3_cos_abel_limit(double x);

struct Band {
  double k_min = 0.0;
  double k_max = 0.0;
};

struct CFQuadratureConfig {
  quad::Options opts{};
  std::optional<Band> band;
  double central_alpha = 0.0;
  int min_phi_nodes = 32;
};

// Throws PhysicsError for a zero lag on the full spectrum and NumericError if the
// quadrature misses its tolerance.
quad::Result em_cf_quadrature_result(const CFComponentId& component, const CFLagParams& lag,
                                     const CFQuadratureConfig& config = {});
double em_cf_quadrature(const CFComponentId& component, const CFLagParams& lag,
                        const CFQuadratureConfig& config = {});
// Magnetic and mixed components; rejects EE and scalar selectors.
double em_cf_hh_eh(const CFComponentId& component, const CFLagParams& lag, const CFQuadratureConfig& config = {});

// -(hbar c / pi) / [(c gamma dtau)^2 - 4 r^2 sin^2(Omega gamma dtau / 2)] with hbar = 1.
double scalar_cf_closed(const RotationParams& params, double dtau);
// Theta quadrature of the phi-integrated form 2 pi B / (B^2 - E^2)^(3/2).
double scalar_cf_quadrature(const RotationParams& params, double dtau, const quad::Options& opts = {});
// Band-limited scalar correlation by 2-D angular quadrature.
double scalar_cf_band(const CFLagParams& lag, const Band& band, const CFQuadratureConfig& config = {});

}  // namespace rotzp
