#include "rotzp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rotzp::quad {

namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// Kronrod 31 / Gauss 15 pair from Boost's tables; the Gauss nodes sit at the even
// Kronrod indices. The panel error is |K - G|.
Panel gk_panel(const Fn& f, double a, double b) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
  using Gauss = boost::math::quadrature::gauss<double, 15>;
  static const auto& kx = Kronrod::abscissa();
  static const auto& kw = Kronrod::weights();
  static const auto& gw = Gauss::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double f0 = f(c);
  double k = kw[0] * f0;
  double g = gw[0] * f0;
  double l1 = kw[0] * std::abs(f0);
  for (std::size_t i = 1; i < kx.size(); ++i) {
    const double fl = f(c - h * kx[i]);
    const double fr = f(c + h * kx[i]);
    k += kw[i] * (fl + fr);
    l1 += kw[i] * (std::abs(fl) + std::abs(fr));
    if (i % 2 == 0) g += gw[i / 2] * (fl + fr);
  }
  return {a, b, h * k, std::abs(h * (k - g)), std::abs(h) * l1};
}

}  // namespace

double target_error(const Options& opts, double value) {
  return std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
}

Result integrate(const Fn& f, double a, double b, const Options& opts, int initial_panels) {
  Result r;
  if (a == b) {
    r.converged = true;
    return r;
  }
  const int n0 = std::max(1, initial_panels);
  std::priority_queue<Panel> queue;
  const double h = (b - a) / n0;
  for (int i = 0; i < n0; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == n0) ? b : a + (i + 1) * h;
    queue.push(gk_panel(f, lo, hi));
  }
  int panels = n0;
  auto totals = [&](double& v, double& e, double& l1) {
    // Summed in a fixed order so the result is independent of queue layout.
    std::vector<Panel> all;
    all.reserve(queue.size());
    auto copy = queue;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
    v = e = l1 = 0.0;
    for (const auto& p : all) {
      v += p.value;
      e += p.error;
      l1 += p.l1;
    }
  };

  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  totals(value, error, l1);
  while (error > std::max(opts.abs_tol, opts.rel_tol * l1) && panels < opts.max_panels) {
    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    queue.pop();
    const Panel left = gk_panel(f, worst.a, mid);
    const Panel right = gk_panel(f, mid, worst.b);
    queue.push(left);
    queue.push(right);
    ++panels;
    // Running update; a full ordered resum happens at exit.
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
  }
  totals(value, error, l1);
  r.value = value;
  r.error = error;
  r.l1 = l1;
  r.evaluations = 31 * (2 * panels - n0);
  r.converged = error <= std::max(opts.abs_tol, opts.rel_tol * l1);
  return r;
}

Result integrate_half_line(const Fn& f, double a, const Options& opts) {
  static thread_local boost::math::quadrature::exp_sinh<double> integrator;
  Result r;
  double err = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  auto shifted = [&](double x) { return f(x + a); };
  r.value = integrator.integrate(shifted, opts.rel_tol, &err, &l1, &levels);
  r.error = err;
  r.l1 = l1;
  r.evaluations = static_cast<int>(levels);
  r.converged = err <= std::max(opts.abs_tol, opts.rel_tol * l1) || err <= target_error(opts, r.value);
  return r;
}

Result integrate_periodic(const Fn& f, double a, double period, const Options& opts, int min_nodes,
                          int max_nodes) {
  if (min_nodes < 1 || max_nodes < min_nodes) {
    throw std::invalid_argument("integrate_periodic: bad node limits");
  }
  Result r;
  int n = min_nodes;
  double sum = 0.0;
  double abs_sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double v = f(a + period * j / n);
    sum += v;
    abs_sum += std::abs(v);
  }
  double estimate = sum * period / n;
  r.evaluations = n;
  while (true) {
    if (2 * n > max_nodes) break;
    double added = 0.0;
    for (int j = 0; j < n; ++j) {
      const double v = f(a + period * (2 * j + 1) / (2.0 * n));
      added += v;
      abs_sum += std::abs(v);
    }
    r.evaluations += n;
    sum += added;
    n *= 2;
    const double next = sum * period / n;
    const double diff = std::abs(next - estimate);
    estimate = next;
    const double l1 = abs_sum * period / n;
    if (diff <= std::max(opts.abs_tol, opts.rel_tol * l1)) {
      r.value = estimate;
      r.error = diff;
      r.l1 = l1;
      r.converged = true;
      return r;
    }
    r.error = diff;
  }
  r.value = estimate;
  r.l1 = abs_sum * period / n;
  r.converged = false;
  return r;
}

Result integrate_sphere(const Fn2& g, const Options& opts, int min_phi_nodes) {
  Options inner = opts;
  inner.abs_tol = opts.abs_tol * 0.1;
  inner.rel_tol = opts.rel_tol * 0.1;
  bool inner_ok = true;
  double inner_err = 0.0;
  auto outer = [&](double theta) {
    const double s = std::sin(theta);
    const Result ph = integrate_periodic([&](double phi) { return g(theta, phi); }, 0.0, 2.0 * M_PI, inner,
                                         min_phi_nodes);
    inner_ok = inner_ok && ph.converged;
    inner_err = std::max(inner_err, ph.error);
    return s * ph.value;
  };
  Result r = integrate(outer, 0.0, M_PI, opts, 2);
  r.error += M_PI * inner_err;
  r.converged = r.converged && inner_ok;
  return r;
}

Extrapolation extrapolate_to_zero(std::span<const double> h, std::span<const double> y, int power) {
  if (h.size() != y.size() || h.empty()) {
    throw std::invalid_argument("extrapolate_to_zero: need matching, nonempty samples");
  }
  const std::size_t n = h.size();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::pow(h[i], power);
  std::vector<double> p(y.begin(), y.end());
  Extrapolation out;
  out.value = p[n - 1];
  out.error = std::numeric_limits<double>::infinity();
  // p[i] after pass m holds the degree-m interpolant through points i-m..i at 0.
  for (std::size_t m = 1; m < n; ++m) {
    double prev_last = p[n - 1];
    for (std::size_t i = n - 1; i >= m; --i) {
      const double xa = x[i - m];
      const double xb = x[i];
      p[i] = (xa * p[i] - xb * p[i - 1]) / (xa - xb);
      if (i == m) break;
    }
    out.error = std::abs(p[n - 1] - prev_last);
    out.value = p[n - 1];
  }
  return out;
}

}  // namespace rotzp::quad
