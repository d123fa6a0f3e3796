#pragma once

// Discrete-spectrum machinery: the Abel-Plana formula, the regularized sums
// sum_n n^p cos(n F) for p = 1, 3 split into a lag-divergent piece and a thermal
// remainder, and the discrete correlation functions built from them.
// Units as in analytic_cf.hpp (hbar = c = k0 = 1).

#include <complex>
#include <functional>

#include "rotzp/analytic_cf.hpp"
#include "rotzp/correlation.hpp"
#include "rotzp/quadrature.hpp"

namespace rotzp {

using ComplexFn = std::function<std::complex<double>(std::complex<double>)>;

struct AbelPlanaResult {
  double sum_direct = 0.0;       // sum_{n>=0} f(n)
  double integral_part = 0.0;    // int_0^inf f
  double half_f0 = 0.0;          // f(0) / 2
  double correction_part = 0.0;  // i int_0^inf (f(it) - f(-it)) / (e^{2 pi t} - 1)
  int terms = 0;

  double formula() const { return integral_part + half_f0 + correction_part; }
};

// f must be real on the real axis and decay in the right half-plane. Throws
// NumericError if a quadrature or the direct sum fails to converge.
AbelPlanaResult abel_plana(const ComplexFn& f, int max_terms = 1000000);

// The zero-point term int w^p dw is never evaluated; only its finite-lag value
// (6 / F^4 for p = 3, -1 / F^2 for p = 1) is carried.
struct DivergentTerm {
  int power = 3;
  double finite_lag_value = 0.0;
};

struct SpectralSplit {
  DivergentTerm divergent;
  double thermal_part = 0.0;
  double F_d = 0.0;

  double total() const { return divergent.finite_lag_value + thermal_part; }
};

// S_d = (3 - 2 sin^2(F/2)) / (8 sin^4(F/2)) = 6 / F^4 + remainder.
// Throws PhysicsError for F on the lattice 2 pi Z.
SpectralSplit s3_closed(double F);
// The remainder alone, finite at F = 0 where it equals 1/120. Uses its Taylor
// series for |F| < 1 to avoid cancellation.
double s3_thermal_remainder(double F);
// 2 int_0^inf t^3 cosh(t F) / (e^{2 pi t} - 1) dt, |F| < 2 pi.
double s3_thermal_integral(double F, const quad::Options& opts = {});

// Partial-fraction form 6/F^4 + 6 sum_n (2 pi n)^-4 [(1 + F/2pi n)^-4 + (1 - F/2pi n)^-4]
// with an Euler-Maclaurin tail beyond n_terms.
double s3_alt_series(double F, int n_terms);

// sum n cos(n F): total -1 / (4 sin^2(F/2)), divergent piece -1/F^2, thermal part
// -2 int_0^inf t cosh(t F) / (e^{2 pi t} - 1) dt by quadrature.
SpectralSplit s1_sum(double F);
double s1_thermal_integral(double F, const quad::Options& opts = {});
// -1/(4 sin^2(F/2)) + 1/F^2, finite at F = 0 where it equals -1/12.
double s1_thermal_remainder(double F);

// sum_{n>=1} n^p cos(n F) exp(-eps n) by direct summation.
double abel_damped_sum(int p, double F, double eps);
// eps -> 0 by Neville extrapolation in eps^2 over eps = 0.2 ... 0.0125.
quad::Extrapolation abel_regularized_limit(int p, double F);

// sum_{n=1}^{n_max} n^p cos(n F)
double truncated_sum(int p, double F, int n_max);

struct PhaseArg {
  double F_d = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  // F_d = delta - 2 beta sin(delta/2) sin(theta) sin(phi).
  static PhaseArg make(double beta, double delta, double theta, double phi);
};

struct DiscreteConfig {
  quad::Options opts{};
  int min_phi_nodes = 32;
};

struct DiscreteCFResult {
  CFValue total;
  CFValue thermal;
  double quadrature_error = 0.0;
  // Angular nodes moved off a pole of the summand.
  int perturbed_nodes = 0;
};

// <E_(1) E_(1)> for the discrete spectrum from the four-term angular structure.
DiscreteCFResult discrete_em_cf_E11(const CFLagParams& lag, const DiscreteConfig& config = {});
// Any EM component from the general projection kernel.
DiscreteCFResult discrete_em_cf(const CFComponentId& component, const CFLagParams& lag,
                                const DiscreteConfig& config = {});
DiscreteCFResult discrete_scalar_cf(const CFLagParams& lag, const DiscreteConfig& config = {});

// Truncated-spectrum correlation (shells n = 1..n_max), the exact expectation of the
// discrete Monte Carlo estimator.
double discrete_cf_truncated(const CFComponentId& component, const CFLagParams& lag, int n_max,
                             const DiscreteConfig& config = {});

}  // namespace rotzp
