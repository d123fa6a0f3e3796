#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotzp/constants.hpp"
#include "rotzp/errors.hpp"
#include "rotzp/kinematics.hpp"
#include "rotzp/spectral_sums.hpp"
#include "rotzp/stochastic_field.hpp"
#include "rotzp/thermo.hpp"
#include "rotzp/validate.hpp"

namespace rotzp::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string slug(const std::string& s) {
  std::string out;
  for (char c : s) out += (c == ' ') ? '-' : c;
  return out;
}

constexpr const char* kEmUnits = "hbar*c*k0^4";
constexpr const char* kScalarUnits = "hbar*c*k0^2";

struct Context {
  const RunConfig& cfg;
  std::ostream& diag;
  RotationParams params;
  std::vector<Row>& rows;

  Row row(const std::string& command, double delta, Method m, double value, double err, const char* units) const {
    return {command, params.beta(), params.gamma(), delta, std::string(method_name(m)), value, err, units, cfg.seed};
  }
};

quad::Options options_for(const RunConfig& cfg) {
  quad::Options o;
  if (cfg.tolerance) {
    o.rel_tol = *cfg.tolerance;
    o.abs_tol = *cfg.tolerance * 0.1;
  }
  return o;
}

RotationParams resolve_params(const RunConfig& cfg) {
  const double c = cfg.si ? si::speed_of_light : 1.0;
  if (cfg.si && !cfg.omega) throw std::invalid_argument("--si needs --omega");
  const double omega = cfg.omega.value_or(1.0);
  if (cfg.beta) {
    if (omega <= 0.0) throw PhysicsError("--beta needs a positive --omega");
    return RotationParams::from_beta(*cfg.beta, omega, c);
  }
  return RotationParams::make(omega, cfg.radius.value_or(0.0), c);
}

std::vector<Method> methods_or(const RunConfig& cfg, std::vector<Method> fallback) {
  std::vector<Method> m = cfg.methods.empty() ? fallback : cfg.methods;
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

std::vector<double> deltas_or(const RunConfig& cfg, double fallback) {
  std::vector<double> d = cfg.deltas.empty() ? std::vector<double>{fallback} : cfg.deltas;
  std::sort(d.begin(), d.end());
  return d;
}

void run_tetrad(Context& ctx) {
  const RotationParams& p = ctx.params;
  const double amag = p.radius() * p.omega() * p.omega() * p.gamma() * p.gamma();
  for (double tau : deltas_or(ctx.cfg, 0.0)) {
    const Tetrad fs = frenet_serret_tetrad(p, tau);
    const Tetrad fw = fermi_walker_tetrad(p, tau);
    const auto u = project_vector(fs, four_velocity(p, tau));
    const auto a = project_vector(fs, four_acceleration(p, tau));
    const auto b = project_vector(fw, four_acceleration(p, tau));
    const double th = p.gamma() * p.phase(tau);
    const double rest = std::max({std::abs(u[0]), std::abs(u[1]), std::abs(u[2]), std::abs(u[3] + p.c())});
    const double fs_acc = std::max({std::abs(a[0] + amag), std::abs(a[1]), std::abs(a[2]), std::abs(a[3])});
    const double fw_acc = std::max({std::abs(b[0] + amag * std::cos(th)), std::abs(b[1] + amag * std::sin(th)),
                                    std::abs(b[2]), std::abs(b[3])});
    const char* units = "residual";
    ctx.rows.push_back(ctx.row("tetrad/fermi-walker/acceleration", tau, Method::closed_form, fw_acc, 0.0, units));
    ctx.rows.push_back(
        ctx.row("tetrad/fermi-walker/orthonormality", tau, Method::closed_form, orthonormality_residual(fw), 0.0, units));
    ctx.rows.push_back(ctx.row("tetrad/frenet-serret/acceleration", tau, Method::closed_form, fs_acc, 0.0, units));
    ctx.rows.push_back(
        ctx.row("tetrad/frenet-serret/orthonormality", tau, Method::closed_form, orthonormality_residual(fs), 0.0, units));
    ctx.rows.push_back(ctx.row("tetrad/frenet-serret/rest", tau, Method::closed_form, rest, 0.0, units));
  }
}

McConfig mc_config(const RunConfig& cfg, bool scalar, SpectrumKind kind) {
  McConfig mc;
  mc.spectrum.kind = kind;
  mc.spectrum.field = scalar ? FieldKind::scalar : FieldKind::em;
  const Band band = cfg.band.value_or(Band{0.5, 1.5});
  mc.spectrum.k_min = band.k_min;
  mc.spectrum.k_max = band.k_max;
  mc.spectrum.n_max = cfg.n_max;
  mc.n_modes = cfg.modes;
  mc.n_realizations = cfg.realizations;
  mc.seed = cfg.seed;
  return mc;
}

// Nondimensional worldline (Omega = c = 1) with the configuration's beta.
RotationParams unit_params(const RotationParams& p) { return RotationParams::from_beta(p.beta()); }

void run_cf(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const auto methods = methods_or(cfg, {Method::quadrature, Method::closed_form});
  const auto deltas = deltas_or(cfg, 1.0);
  const RotationParams unit = unit_params(ctx.params);
  const double beta = unit.beta();
  const bool banded = cfg.band.has_value();
  for (Method m : methods) {
    if (m == Method::discrete_sum) throw std::invalid_argument("cf: use the 'discrete' command for discrete sums");
    if (m == Method::closed_form && banded) {
      throw std::invalid_argument("cf: closed forms exist only for the full spectrum (drop --band)");
    }
  }
  std::vector<CFComponentId> comps = cfg.components;
  if (comps.empty()) comps.push_back({FieldPair::EE, 1, 1});
  CFQuadratureConfig qc;
  qc.opts = options_for(cfg);
  qc.band = cfg.band;

  for (const auto& comp : comps) {
    const bool scalar = comp.pair == FieldPair::SS;
    if (std::find(methods.begin(), methods.end(), Method::closed_form) != methods.end() && !scalar &&
        !(comp.pair == FieldPair::EE && comp.a == 1 && comp.b == 1)) {
      throw std::invalid_argument("cf: closed form available only for E11 and S, not " + comp.name());
    }
    const std::string cmd = "cf/" + comp.name() + (banded ? "/band" : "");
    const char* units = scalar ? kScalarUnits : kEmUnits;

    std::vector<CFValue> mc;
    if (std::find(methods.begin(), methods.end(), Method::monte_carlo) != methods.end()) {
      std::vector<double> tau2;
      for (double d : deltas) tau2.push_back(d / unit.gamma());
      const CFComponentId one[] = {comp};
      ctx.diag << "cf: " << cfg.realizations << " realizations for " << comp.name() << "\n";
      mc = mc_correlation_batch(one, unit, 0.0, tau2, mc_config(cfg, scalar, SpectrumKind::continuous_banded))[0];
    }

    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const double delta = deltas[i];
      const CFLagParams lag = CFLagParams::make(beta, delta);
      for (Method m : methods) {
        switch (m) {
          case Method::monte_carlo:
            ctx.rows.push_back(ctx.row(cmd + "/mc-band", delta, m, mc[i].value, mc[i].std_error, units));
            break;
          case Method::quadrature: {
            double v;
            if (scalar && !banded) {
              v = scalar_cf_quadrature(unit, delta / unit.gamma(), qc.opts);
            } else {
              v = em_cf_quadrature(comp, lag, qc);
            }
            ctx.rows.push_back(ctx.row(cmd, delta, m, v, 0.0, units));
            break;
          }
          case Method::closed_form: {
            const double v = scalar ? scalar_cf_closed(unit, delta / unit.gamma()) : em_cf_closed_E11(lag);
            ctx.rows.push_back(ctx.row(cmd, delta, m, v, 0.0, units));
            break;
          }
          case Method::discrete_sum:
            break;
        }
      }
    }
  }
}

void run_discrete(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const auto methods = methods_or(cfg, {Method::discrete_sum});
  const auto deltas = deltas_or(cfg, 1.0);
  const RotationParams unit = unit_params(ctx.params);
  std::vector<CFComponentId> comps = cfg.components;
  if (comps.empty()) comps.push_back({FieldPair::EE, 1, 1});
  DiscreteConfig dc;
  dc.opts = options_for(cfg);
  for (Method m : methods) {
    if (m == Method::closed_form) throw std::invalid_argument("discrete: no closed-form method");
  }

  for (const auto& comp : comps) {
    const bool scalar = comp.pair == FieldPair::SS;
    const char* units = scalar ? kScalarUnits : kEmUnits;
    const std::string base = "discrete/" + comp.name();
    const std::string trunc = base + "/nmax=" + std::to_string(cfg.n_max);

    std::vector<CFValue> mc;
    if (std::find(methods.begin(), methods.end(), Method::monte_carlo) != methods.end()) {
      std::vector<double> tau2;
      for (double d : deltas) tau2.push_back(d / unit.gamma());
      const CFComponentId one[] = {comp};
      ctx.diag << "discrete: " << cfg.realizations << " realizations, n_max = " << cfg.n_max << "\n";
      mc = mc_correlation_batch(one, unit, 0.0, tau2, mc_config(cfg, scalar, SpectrumKind::discrete))[0];
    }

    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const double delta = deltas[i];
      const CFLagParams lag = CFLagParams::make(unit.beta(), delta);
      for (Method m : methods) {
        switch (m) {
          case Method::monte_carlo:
            ctx.rows.push_back(ctx.row(trunc, delta, m, mc[i].value, mc[i].std_error, units));
            break;
          case Method::quadrature:
            ctx.rows.push_back(ctx.row(trunc, delta, m, discrete_cf_truncated(comp, lag, cfg.n_max, dc), 0.0, units));
            break;
          case Method::discrete_sum: {
            const bool e11 = comp.pair == FieldPair::EE && comp.a == 1 && comp.b == 1;
            const DiscreteCFResult r = e11 ? discrete_em_cf_E11(lag, dc) : discrete_em_cf(comp, lag, dc);
            if (r.perturbed_nodes > 0) {
              ctx.diag << "discrete: " << r.perturbed_nodes << " angular nodes moved off poles at delta = " << delta
                       << "\n";
            }
            ctx.rows.push_back(ctx.row(base + "/thermal", delta, m, r.thermal.value, 0.0, units));
            ctx.rows.push_back(ctx.row(base + "/total", delta, m, r.total.value, 0.0, units));
            break;
          }
          case Method::closed_form:
            break;
        }
      }
    }
  }
}

void energy_rows(Context& ctx, const RotationParams& p, double radius) {
  const bool si_units = ctx.cfg.si;
  const char* units = si_units ? "J/m^3" : "hbar*Omega^4/c^3";
  const auto em = em_density_rotating(p);
  const auto sc = scalar_density_rotating(p);
  auto push = [&](const std::string& cmd, Method m, double v) {
    const bool factor = cmd.ends_with("masking-factor");
    Row r = ctx.row(cmd, radius, m, v, 0.0, factor ? "dimensionless" : units);
    r.beta = p.beta();
    r.gamma = p.gamma();
    ctx.rows.push_back(r);
  };
  push("energy/em", Method::closed_form, si_units ? em.thermal_value : em.thermal_value_nondim);
  push("energy/em", Method::discrete_sum, si_units ? em.spectral_thermal_value : em.spectral_thermal_value_nondim);
  push("energy/em/masking-factor", Method::closed_form, em.masking_factor);
  push("energy/em/masking-factor", Method::quadrature, em.assembled_factor);
  push("energy/scalar", Method::closed_form, si_units ? sc.thermal_value : sc.thermal_value_nondim);
  push("energy/scalar", Method::discrete_sum,
       si_units ? sc.spectral_thermal_value : sc.spectral_thermal_value_nondim);
  push("energy/scalar/masking-factor", Method::closed_form, sc.masking_factor);
  push("energy/scalar/masking-factor", Method::quadrature, sc.assembled_factor);
  Row t = ctx.row("energy/t_rot", radius, Method::closed_form, em.t_rot.kelvin, 0.0, "K");
  t.beta = p.beta();
  t.gamma = p.gamma();
  ctx.rows.push_back(t);
}

void run_energy(Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (cfg.radius_sweep.empty()) {
    energy_rows(ctx, ctx.params, ctx.params.radius());
    return;
  }
  std::vector<double> radii = cfg.radius_sweep;
  std::sort(radii.begin(), radii.end());
  for (double r : radii) {
    const RotationParams p = RotationParams::make(ctx.params.omega(), r, ctx.params.c());
    energy_rows(ctx, p, r);
  }
}

int run_validate(Context& ctx) {
  ValidationOptions vo;
  vo.seed = ctx.cfg.seed;
  vo.realizations = ctx.cfg.realizations;
  const ValidationReport rep = run_validation(vo);
  char line[256];
  for (const auto& c : rep.checks) {
    Row r{"validate/" + c.module + "/" + slug(c.name), 0.0, 1.0, 0.0, c.passed ? "pass" : "fail",
          c.residual, 0.0, "residual", ctx.cfg.seed};
    ctx.rows.push_back(r);
    std::snprintf(line, sizeof line, "%-17s %-48s %11.3e  tol %9.1e  %s\n", c.module.c_str(), c.name.c_str(),
                  c.residual, c.tolerance, c.passed ? "pass" : "FAIL");
    ctx.diag << line;
  }
  ctx.diag << (rep.all_passed() ? "all checks passed\n" : "some checks FAILED\n");
  return rep.all_passed() ? kOk : kNumeric;
}

}  // namespace

std::vector<double> parse_grid(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() == 1) return {parse_number(parts[0])};
  if (parts.size() != 3) throw std::invalid_argument("grid must be 'x' or 'start:stop:count', got '" + s + "'");
  const double a = parse_number(parts[0]);
  const double b = parse_number(parts[1]);
  const double n = parse_number(parts[2]);
  if (n < 1 || n != std::floor(n)) throw std::invalid_argument("grid count must be a positive integer");
  const int count = static_cast<int>(n);
  std::vector<double> g;
  for (int i = 0; i < count; ++i) g.push_back(count == 1 ? a : a + (b - a) * i / (count - 1));
  return g;
}

Band parse_band(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw std::invalid_argument("band must be 'kmin:kmax', got '" + s + "'");
  Band b{parse_number(parts[0]), parse_number(parts[1])};
  if (!(b.k_min >= 0.0 && b.k_max > b.k_min)) throw std::invalid_argument("band must satisfy 0 <= kmin < kmax");
  return b;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << csv_field(r.command) << ',' << format_double(r.beta) << ',' << format_double(r.gamma) << ','
       << format_double(r.delta) << ',' << csv_field(r.method) << ',' << format_double(r.value) << ','
       << format_double(r.std_error) << ',' << csv_field(r.units) << ',' << r.seed << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<Row>& rows) {
  auto num = [](double v) { return std::isfinite(v) ? format_double(v) : std::string("null"); };
  auto str = [](const std::string& s) { return nlohmann::json(s).dump(); };
  os << "{\n  \"header\": [";
  const auto cols = split(kCsvHeader, ',');
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? ", " : "") << str(cols[i]);
  os << "],\n  \"rows\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    os << (i ? ",\n" : "\n") << "    {\"command\": " << str(r.command) << ", \"beta\": " << num(r.beta)
       << ", \"gamma\": " << num(r.gamma) << ", \"delta\": " << num(r.delta) << ", \"method\": " << str(r.method)
       << ", \"value\": " << num(r.value) << ", \"std_error\": " << num(r.std_error)
       << ", \"units\": " << str(r.units) << ", \"seed\": " << r.seed << "}";
  }
  os << "\n  ]\n}\n";
}

void emit_report(const std::vector<Row>& rows, Format format, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emit_report: no rows to write");
  std::ostringstream buf;
  if (format == Format::csv) {
    write_csv(buf, rows);
  } else {
    write_json(buf, rows);
  }
  if (path.empty() || path == "-") {
    std::cout << buf.str();
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << buf.str();
  if (!f.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

RunResult run(const RunConfig& config, std::ostream& diagnostics) {
  RunResult res;
  try {
    const RotationParams params = resolve_params(config);
    Context ctx{config, diagnostics, params, res.rows};
    try {
      if (config.command == "tetrad") {
        run_tetrad(ctx);
      } else if (config.command == "cf") {
        run_cf(ctx);
      } else if (config.command == "discrete") {
        run_discrete(ctx);
      } else if (config.command == "energy") {
        run_energy(ctx);
      } else if (config.command == "validate") {
        res.exit_code = run_validate(ctx);
        if (res.exit_code != kOk) res.message = "validation failed";
      } else {
        throw std::invalid_argument("unknown command '" + config.command + "'");
      }
    } catch (const NumericError& e) {
      res.rows.push_back({config.command + "/failed", params.beta(), params.gamma(), std::nan(""), "failed",
                          std::nan(""), std::nan(""), "none", config.seed});
      res.exit_code = kNumeric;
      res.message = e.what();
    }
  } catch (const PhysicsError& e) {
    res.exit_code = kPhysics;
    res.message = e.what();
  } catch (const std::invalid_argument& e) {
    res.exit_code = kUsage;
    res.message = e.what();
  } catch (const std::exception& e) {
    res.exit_code = kNumeric;
    res.message = e.what();
  }
  return res;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Rotating-detector zero-point field toolkit: tetrads, correlation functions, spectral sums, "
               "thermal energy densities"};
  RunConfig cfg;
  std::string delta, methods, components, band, sweep, format = "csv";
  double omega = 0, radius = 0, beta = 0, tolerance = 0;

  app.set_config("--config", "", "flat key=value file; command-line flags win");
  app.add_option("command", cfg.command, "tetrad | cf | discrete | energy | validate")
      ->required()
      ->check(CLI::IsMember({"tetrad", "cf", "discrete", "energy", "validate"}));
  auto* o_omega = app.add_option("--omega", omega, "angular velocity (rad/s with --si; default 1)");
  auto* o_radius = app.add_option("--radius", radius, "rotation radius (m with --si)");
  auto* o_beta = app.add_option("--beta", beta, "v/c; alternative to --radius");
  o_beta->excludes(o_radius);
  app.add_option("--delta", delta, "lag Omega*gamma*dtau (proper time for 'tetrad'): x or start:stop:count");
  app.add_option("--methods", methods, "comma list of closed,quadrature,mc,discrete");
  app.add_option("--component", components, "comma list of E11..E33, H11..H33, EH11..EH33, S");
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--realizations", cfg.realizations, "Monte Carlo realizations")->check(CLI::PositiveNumber);
  app.add_option("--modes", cfg.modes, "wavevectors per realization (directions per shell when discrete)")
      ->check(CLI::PositiveNumber);
  app.add_option("--band", band, "band limits kmin:kmax in units of Omega/c");
  app.add_option("--nmax", cfg.n_max, "highest discrete shell")->check(CLI::PositiveNumber);
  app.add_option("--radius-sweep", sweep, "radii start:stop:count for 'energy'");
  app.add_option("--out", cfg.out, "output file (default standard output)");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--si", cfg.si, "SI inputs and outputs");
  auto* o_tol = app.add_option("--tolerance", tolerance, "relative quadrature tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (o_omega->count()) cfg.omega = omega;
    if (o_radius->count()) cfg.radius = radius;
    if (o_beta->count()) cfg.beta = beta;
    if (o_tol->count()) cfg.tolerance = tolerance;
    if (!delta.empty()) cfg.deltas = parse_grid(delta);
    for (const auto& m : split(methods, ',')) cfg.methods.push_back(parse_method(m));
    for (const auto& c : split(components, ',')) cfg.components.push_back(CFComponentId::parse(c));
    if (!band.empty()) cfg.band = parse_band(band);
    if (!sweep.empty()) cfg.radius_sweep = parse_grid(sweep);
    cfg.format = format == "json" ? Format::json : Format::csv;
  } catch (const std::exception& e) {
    std::cerr << "rotzp: " << e.what() << "\n";
    return kUsage;
  }

  RunResult res = run(cfg, std::cerr);
  if (!res.message.empty()) std::cerr << "rotzp: " << res.message << "\n";
  if (!res.rows.empty()) {
    try {
      emit_report(res.rows, cfg.format, cfg.out);
    } catch (const std::exception& e) {
      std::cerr << "rotzp: " << e.what() << "\n";
      return res.exit_code != kOk ? res.exit_code : kUsage;
    }
  } else if (res.exit_code == kOk) {
    std::cerr << "rotzp: no rows produced\n";
    return kNumeric;
  }
  return res.exit_code;
}

}  // namespace rotzp::cli
