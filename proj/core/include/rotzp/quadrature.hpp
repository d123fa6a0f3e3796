#pragma once

// Numerical integration used across the library. Finite intervals go through a
// globally adaptive Gauss-Kronrod driver (Boost.Math supplies the 15/31-point rule
// on each panel), half-lines through exp-sinh, and periodic integrands through a
// node-doubling trapezoid rule.

#include <functional>
#include <span>

namespace rotzp::quad {

struct Options {
  double abs_tol = 1e-11;
  double rel_tol = 1e-10;
  int max_panels = 4000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  // Integral of |f|; the relative tolerance is measured against it.
  double l1 = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Fn = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

double target_error(const Options& opts, double value);

// Globally adaptive: the panel with the largest error estimate is bisected until
// the summed estimate meets max(abs_tol, rel_tol * l1).
Result integrate(const Fn& f, double a, double b, const Options& opts = {}, int initial_panels = 1);

// Integral over [a, inf).
Result integrate_half_line(const Fn& f, double a, const Options& opts = {});

// Trapezoid rule over one period starting at a, nodes a + j * period / n. The node
// count doubles from min_nodes until two successive levels agree.
Result integrate_periodic(const Fn& f, double a, double period, const Options& opts = {},
                          int min_nodes = 16, int max_nodes = 1 << 16);

// Integral over the unit sphere of g(theta, phi) sin(theta) dtheta dphi.
Result integrate_sphere(const Fn2& g, const Options& opts = {}, int min_phi_nodes = 16);

struct Extrapolation {
  double value = 0.0;
  double error = 0.0;
};

// Neville extrapolation of y(h) to h = 0 assuming an expansion in powers of
// h^power. Error is the change between the last two diagonal entries.
Extrapolation extrapolate_to_zero(std::span<const double> h, std::span<const double> y, int power = 2);

}  // namespace rotzp::quad
