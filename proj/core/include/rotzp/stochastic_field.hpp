#pragma once

// Finite realizations of the random zero-point field as sums of plane waves with
// independent uniform phases, evaluated on the rotating worldline, and the Monte
// Carlo correlation estimator built on them. Nondimensional units: hbar = c = 1,
// k0 = Omega / c = 1.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "rotzp/correlation.hpp"
#include "rotzp/kinematics.hpp"
#include "rotzp/vec3.hpp"

namespace rotzp {

enum class SpectrumKind { continuous_banded, discrete };
enum class FieldKind { em, scalar };

struct Mode {
  Vec3 direction;
  int polarization_index = 1;
  double wavenumber = 0.0;
  double phase = 0.0;
  // k-space volume represented by the mode.
  double weight = 0.0;
};

struct ModeSet {
  std::vector<Mode> modes;
  SpectrumKind kind = SpectrumKind::continuous_banded;
  FieldKind field = FieldKind::em;
  double k_min = 0.0;
  double k_max = 0.0;
  std::uint64_t seed = 0;
};

struct SpectrumConfig {
  SpectrumKind kind = SpectrumKind::continuous_banded;
  FieldKind field = FieldKind::em;
  double k_min = 0.5;
  double k_max = 1.5;
  // Discrete spectrum: shells n = 1..n_max with wavenumber n * k0.
  int n_max = 8;
};

// Orthonormal pair perpendicular to k_hat, built by Gram-Schmidt from a fixed
// helper axis (z, or x when k_hat is within ~25 degrees of z). The second vector
// is k_hat x first.
std::pair<Vec3, Vec3> polarization_basis(const Vec3& k_hat);
Vec3 polarization_vector(const Mode& m);

// Continuous: n_modes wavevectors stratified uniformly in k^3 over the band.
// Discrete: n_modes directions on every shell. EM sets carry two polarizations per
// wavevector, scalar sets one. Throws std::invalid_argument for an empty band or
// n_modes < 1.
ModeSet sample_modes(const SpectrumConfig& config, int n_modes, std::uint64_t seed);

// Zero-point amplitudes: pi^2 h0^2 = omega / 2 and f^2 = 1 / (2 pi^2 omega).
double em_amplitude(double k);
double scalar_amplitude(double k);

EmFieldLab eval_em_lab(const ModeSet& ms, const RotationParams& params, double tau);
double eval_scalar_lab(const ModeSet& ms, const RotationParams& params, double tau);

// Text form, one mode per line: kx ky kz lambda k phase weight, preceded by a
// single '#' metadata line. Values are written with 17 significant digits.
void write_modes(std::ostream& os, const ModeSet& ms);
ModeSet read_modes(std::istream& is);

// Per-realization seed derived from the master seed and the realization index.
std::uint64_t realization_seed(std::uint64_t master, std::uint64_t index);

struct McConfig {
  SpectrumConfig spectrum;
  int n_modes = 64;
  int n_realizations = 200;
  std::uint64_t seed = 1;
};

// Sample mean and standard error over independent realizations of the product of
// Frenet-Serret projected components at tau1 and tau2. Throws std::invalid_argument
// if n_realizations < 2 or the component does not match the spectrum's field kind.
CFValue mc_correlation(const CFComponentId& component, const RotationParams& params, double tau1, double tau2,
                       const McConfig& config);

// Same estimator for several components and second times sharing one set of
// realizations. Result is indexed [component][lag].
std::vector<std::vector<CFValue>> mc_correlation_batch(std::span<const CFComponentId> components,
                                                       const RotationParams& params, double tau1,
                                                       std::span<const double> tau2, const McConfig& config);

}  // namespace rotzp
