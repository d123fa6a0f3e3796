#pragma once

// Rotation temperature, Planck energy densities and the thermal energy density
// seen by the rotating detector for the electromagnetic and scalar fields.
// Inputs are SI (Omega in rad/s, radius in m); outputs carry both SI values and
// nondimensional ones in units of hbar Omega^4 / c^3.

#include <span>
#include <string>
#include <vector>

#include "rotzp/kinematics.hpp"
#include "rotzp/stochastic_field.hpp"

namespace rotzp {

struct Temperature {
  double kelvin = 0.0;
};

// hbar Omega / (2 pi k_B). Throws PhysicsError for omega < 0.
Temperature t_rot(double omega);

// (hbar / c^3 pi^2) int w^3 / (e^{hbar w / k T} - 1) dw = 4 sigma T^4 / c, in J/m^3.
double planck_em_density(Temperature T);
double planck_em_density_quadrature(Temperature T);

double em_masking_factor(double beta);      // (2/3)(4 gamma^2 - 1)
double scalar_masking_factor(double beta);  // (2/9)(4 gamma^2 - 1)

// The discrete mode sum's delta-function normalization (2/k^2) doubles the
// electromagnetic thermal density relative to the continuum CF prefactor.
inline constexpr double kDiscreteDeltaNormalization = 2.0;

struct EnergyDensityReport {
  FieldKind field_kind = FieldKind::em;
  double beta = 0.0;
  double gamma = 1.0;
  Temperature t_rot;
  double masking_factor = 0.0;
  double thermal_value = 0.0;         // J/m^3
  double thermal_value_nondim = 0.0;  // hbar Omega^4 / c^3
  // Factor re-assembled independently: angular integrals of the projected field
  // kernel (em) or the tetrad contraction of the isotropic lab tensor (scalar).
  double assembled_factor = 0.0;
  // Thermal density rebuilt from the spectral-sum remainder at F_d = 0, J/m^3.
  double spectral_thermal_value = 0.0;
  double spectral_thermal_value_nondim = 0.0;
  std::string divergent_flag;
};

// Throws LightCylinderError for beta > 0.999.
EnergyDensityReport em_density_rotating(const RotationParams& params);
EnergyDensityReport scalar_density_rotating(const RotationParams& params);

// em reports for each radius at fixed omega (SI, c = speed of light unless given).
// Throws PhysicsError if any radius reaches the light cylinder.
std::vector<EnergyDensityReport> density_vs_radius_sweep(double omega, std::span<const double> radii,
                                                         FieldKind field = FieldKind::em, double c = 0.0);

}  // namespace rotzp
