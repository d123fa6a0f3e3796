#include "rotzp/stochastic_field.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rotzp {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec3 uniform_direction(std::mt19937_64& rng) {
  const double z = 2.0 * uniform01(rng) - 1.0;
  const double phi = kTwoPi * uniform01(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

void push_wavevector(ModeSet& ms, const Vec3& dir, double k, double weight, std::mt19937_64& rng) {
  const int n_pol = ms.field == FieldKind::em ? 2 : 1;
  for (int lambda = 1; lambda <= n_pol; ++lambda) {
    ms.modes.push_back({dir, lambda, k, kTwoPi * uniform01(rng), weight});
  }
}

std::array<double, 6> projected_em(const ModeSet& ms, const RotationParams& params, double tau) {
  const EmFieldFrame f = project_em_tensor(frenet_serret_tetrad(params, tau), eval_em_lab(ms, params, tau));
  return {f.E.x, f.E.y, f.E.z, f.H.x, f.H.y, f.H.z};
}

}  // namespace

std::pair<Vec3, Vec3> polarization_basis(const Vec3& k_hat) {
  const Vec3 helper = std::abs(k_hat.z) > 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 0.0, 1.0};
  Vec3 e1 = helper - dot(helper, k_hat) * k_hat;
  e1 = (1.0 / norm(e1)) * e1;
  return {e1, cross(k_hat, e1)};
}

Vec3 polarization_vector(const Mode& m) {
  const auto [e1, e2] = polarization_basis(m.direction);
  return m.polarization_index == 1 ? e1 : e2;
}

ModeSet sample_modes(const SpectrumConfig& config, int n_modes, std::uint64_t seed) {
  if (n_modes < 1) throw std::invalid_argument("sample_modes: n_modes must be >= 1");
  ModeSet ms;
  ms.kind = config.kind;
  ms.field = config.field;
  ms.seed = seed;
  std::mt19937_64 rng(seed);

  if (config.kind == SpectrumKind::continuous_banded) {
    if (!(config.k_min >= 0.0 && config.k_max > config.k_min) || !std::isfinite(config.k_max)) {
      throw std::invalid_argument("sample_modes: empty or invalid band [k_min, k_max]");
    }
    ms.k_min = config.k_min;
    ms.k_max = config.k_max;
    const double c_lo = config.k_min * config.k_min * config.k_min;
    const double c_hi = config.k_max * config.k_max * config.k_max;
    const double weight = (4.0 * M_PI / 3.0) * (c_hi - c_lo) / n_modes;
    ms.modes.reserve(static_cast<std::size_t>(n_modes) * 2);
    for (int i = 0; i < n_modes; ++i) {
      const double u = (i + uniform01(rng)) / n_modes;
      const double k = std::cbrt(c_lo + u * (c_hi - c_lo));
      const Vec3 dir = uniform_direction(rng);
      push_wavevector(ms, dir, k, weight, rng);
    }
  } else {
    if (config.n_max < 1) throw std::invalid_argument("sample_modes: n_max must be >= 1");
    ms.k_min = 1.0;
    ms.k_max = config.n_max;
    ms.modes.reserve(static_cast<std::size_t>(n_modes) * config.n_max * 2);
    for (int n = 1; n <= config.n_max; ++n) {
      const double k = n;
      // The shell contributes k0 * k^2 dO; n = 0 carries no amplitude.
      const double weight = k * k * 4.0 * M_PI / n_modes;
      for (int d = 0; d < n_modes; ++d) {
        const Vec3 dir = uniform_direction(rng);
        push_wavevector(ms, dir, k, weight, rng);
      }
    }
  }
  return ms;
}

double em_amplitude(double k) { return std::sqrt(k / (2.0 * M_PI * M_PI)); }

double scalar_amplitude(double k) {
  return k > 0.0 ? std::sqrt(1.0 / (2.0 * M_PI * M_PI * k)) : 0.0;
}

EmFieldLab eval_em_lab(const ModeSet& ms, const RotationParams& params, double tau) {
  const FourVector x = worldline_position(params, tau);
  const Vec3 r = x.spatial();
  const double t = x.time() / params.c();
  EmFieldLab out;
  for (const Mode& m : ms.modes) {
    const double arg = m.wavenumber * dot(m.direction, r) - params.c() * m.wavenumber * t - m.phase;
    const double amp = std::sqrt(m.weight) * em_amplitude(m.wavenumber) * std::cos(arg);
    const Vec3 eps = polarization_vector(m);
    out.E += amp * eps;
    out.H += amp * cross(m.direction, eps);
  }
  return out;
}

double eval_scalar_lab(const ModeSet& ms, const RotationParams& params, double tau) {
  const FourVector x = worldline_position(params, tau);
  const Vec3 r = x.spatial();
  const double t = x.time() / params.c();
  double psi = 0.0;
  for (const Mode& m : ms.modes) {
    const double arg = m.wavenumber * dot(m.direction, r) - params.c() * m.wavenumber * t - m.phase;
    psi += std::sqrt(m.weight) * scalar_amplitude(m.wavenumber) * std::cos(arg);
  }
  return psi;
}

void write_modes(std::ostream& os, const ModeSet& ms) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "# kind=%s field=%s k_min=%.17g k_max=%.17g seed=%" PRIu64 "\n",
                ms.kind == SpectrumKind::discrete ? "discrete" : "continuous-banded",
                ms.field == FieldKind::em ? "em" : "scalar", ms.k_min, ms.k_max, ms.seed);
  os << buf;
  for (const Mode& m : ms.modes) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %d %.17g %.17g %.17g\n", m.direction.x, m.direction.y,
                  m.direction.z, m.polarization_index, m.wavenumber, m.phase, m.weight);
    os << buf;
  }
}

ModeSet read_modes(std::istream& is) {
  ModeSet ms;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) {
    throw std::invalid_argument("read_modes: missing metadata line");
  }
  {
    char kind[32] = {0};
    char field[16] = {0};
    if (std::sscanf(line.c_str(), "# kind=%31s field=%15s k_min=%lf k_max=%lf seed=%" SCNu64, kind, field,
                    &ms.k_min, &ms.k_max, &ms.seed) != 5) {
      throw std::invalid_argument("read_modes: malformed metadata line");
    }
    ms.kind = std::string(kind) == "discrete" ? SpectrumKind::discrete : SpectrumKind::continuous_banded;
    ms.field = std::string(field) == "scalar" ? FieldKind::scalar : FieldKind::em;
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Mode m;
    if (!(ls >> m.direction.x >> m.direction.y >> m.direction.z >> m.polarization_index >> m.wavenumber >>
          m.phase >> m.weight)) {
      throw std::invalid_argument("read_modes: malformed mode line '" + line + "'");
    }
    ms.modes.push_back(m);
  }
  return ms;
}

std::uint64_t realization_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over a golden-ratio stride.
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<std::vector<CFValue>> mc_correlation_batch(std::span<const CFComponentId> components,
                                                       const RotationParams& params, double tau1,
                                                       std::span<const double> tau2, const McConfig& config) {
  if (config.n_realizations < 2) {
    throw std::invalid_argument("mc_correlation: need at least 2 realizations");
  }
  const bool scalar = config.spectrum.field == FieldKind::scalar;
  for (const auto& c : components) {
    if ((c.pair == FieldPair::SS) != scalar) {
      throw std::invalid_argument("mc_correlation: component " + c.name() + " does not match the spectrum's field");
    }
  }
  const std::size_t nc = components.size();
  const std::size_t nl = tau2.size();
  const std::size_t nr = static_cast<std::size_t>(config.n_realizations);
  std::vector<double> samples(nr * nc * nl);

  for (std::size_t r = 0; r < nr; ++r) {
    const ModeSet ms = sample_modes(config.spectrum, config.n_modes, realization_seed(config.seed, r));
    double* row = &samples[r * nc * nl];
    if (scalar) {
      const double p1 = eval_scalar_lab(ms, params, tau1);
      for (std::size_t l = 0; l < nl; ++l) {
        const double p2 = eval_scalar_lab(ms, params, tau2[l]);
        for (std::size_t c = 0; c < nc; ++c) row[c * nl + l] = p1 * p2;
      }
    } else {
      const auto f1 = projected_em(ms, params, tau1);
      for (std::size_t l = 0; l < nl; ++l) {
        const auto f2 = projected_em(ms, params, tau2[l]);
        for (std::size_t c = 0; c < nc; ++c) {
          row[c * nl + l] = f1[components[c].first_slot()] * f2[components[c].second_slot()];
        }
      }
    }
  }

  std::vector<std::vector<CFValue>> out(nc, std::vector<CFValue>(nl));
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t l = 0; l < nl; ++l) {
      double mean = 0.0;
      for (std::size_t r = 0; r < nr; ++r) mean += samples[r * nc * nl + c * nl + l];
      mean /= static_cast<double>(nr);
      double ss = 0.0;
      for (std::size_t r = 0; r < nr; ++r) {
        const double d = samples[r * nc * nl + c * nl + l] - mean;
        ss += d * d;
      }
      const double var = ss / static_cast<double>(nr - 1);
      out[c][l] = {mean, std::sqrt(var / static_cast<double>(nr)), Method::monte_carlo};
    }
  }
  return out;
}

CFValue mc_correlation(const CFComponentId& component, const RotationParams& params, double tau1, double tau2,
                       const McConfig& config) {
  const CFComponentId comps[] = {component};
  const double lags[] = {tau2};
  return mc_correlation_batch(comps, params, tau1, lags, config)[0][0];
}

}  // namespace rotzp
