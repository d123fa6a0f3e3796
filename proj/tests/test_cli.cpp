#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"

using namespace rotzp;
using namespace rotzp::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "rotzp_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

int shell(const std::string& args) {
  const std::string cmd = std::string(ROTZP_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

RunConfig config(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

std::vector<Row> sample_rows() {
  return {{"cf/E11", 0.6, 1.25, 1.0, "closed-form", 1.0 / 3.0, 0.0, "hbar*c*k0^4", 7},
          {"cf/E11", 0.6, 1.25, 1.0, "monte-carlo", -2.2250738585072014e-308, 0.1, "hbar*c*k0^4", 7},
          {"cf/\"x\",y", 0.1, 1.0, 5e-324, "quadrature", 6.02214076e23, 1e-17, "u", 7}};
}

}  // namespace

TEST(Grid, Parsing) {
  EXPECT_EQ(parse_grid("1.5"), std::vector<double>{1.5});
  const auto g = parse_grid("0.1:0.9:9");
  ASSERT_EQ(g.size(), 9u);
  EXPECT_DOUBLE_EQ(g[0], 0.1);
  EXPECT_DOUBLE_EQ(g[8], 0.9);
  EXPECT_THROW(parse_grid("1:2"), std::invalid_argument);
  EXPECT_THROW(parse_grid("1:2:0"), std::invalid_argument);
  EXPECT_THROW(parse_grid("abc"), std::invalid_argument);
  const auto b = parse_band("0.5:1.5");
  EXPECT_EQ(b.k_min, 0.5);
  EXPECT_EQ(b.k_max, 1.5);
  EXPECT_THROW(parse_band("2:1"), std::invalid_argument);
}

TEST(Csv, HeaderAndColumnOrder) {
  std::ostringstream os;
  write_csv(os, sample_rows());
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "command,beta,gamma,delta,method,value,std_error,units,seed");
  std::getline(is, line);
  EXPECT_EQ(line, "cf/E11,0.59999999999999998,1.25,1,closed-form,0.33333333333333331,0,hbar*c*k0^4,7");
}

TEST(Report, EmptyRowsIsAnErrorAndWritesNothing) {
  const auto p = scratch("empty.csv");
  EXPECT_THROW(emit_report({}, Format::csv, p.string()), std::invalid_argument);
  EXPECT_FALSE(fs::exists(p));
}

TEST(Report, UnwritablePath) {
  EXPECT_THROW(emit_report(sample_rows(), Format::csv, "/nonexistent-dir/x.csv"), std::runtime_error);
}

TEST(Report, JsonRoundTripIsBitExact) {
  const auto p = scratch("rows.json");
  const auto rows = sample_rows();
  emit_report(rows, Format::json, p.string());
  const auto j = nlohmann::json::parse(slurp(p));
  ASSERT_EQ(j["rows"].size(), rows.size());
  EXPECT_EQ(j["header"].size(), 9u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = j["rows"][i];
    EXPECT_EQ(r["command"].get<std::string>(), rows[i].command);
    EXPECT_EQ(r["value"].get<double>(), rows[i].value);
    EXPECT_EQ(r["std_error"].get<double>(), rows[i].std_error);
    EXPECT_EQ(r["beta"].get<double>(), rows[i].beta);
    EXPECT_EQ(r["delta"].get<double>(), rows[i].delta);
    EXPECT_EQ(r["seed"].get<std::uint64_t>(), rows[i].seed);
  }
}

TEST(Report, CsvRoundTripIsBitExact) {
  std::ostringstream os;
  const auto rows = sample_rows();
  write_csv(os, {rows[0], rows[1]});
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  for (int i = 0; i < 2; ++i) {
    std::getline(is, line);
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
    EXPECT_EQ(std::strtod(f[5].c_str(), nullptr), rows[i].value);
  }
}

TEST(Run, CfClosedAndQuadratureAgree) {
  auto c = config("cf");
  c.beta = 0.6;
  c.deltas = {1.0};
  c.components = {{FieldPair::EE, 1, 1}};
  c.methods = {Method::closed_form, Method::quadrature};
  std::ostringstream diag;
  const auto r = run(c, diag);
  ASSERT_EQ(r.exit_code, kOk) << r.message;
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_LT(rotzp::test::rel(r.rows[0].value, r.rows[1].value), 1e-8);
  EXPECT_EQ(r.rows[0].units, "hbar*c*k0^4");
}

TEST(Run, EnergySweepIsMonotone) {
  auto c = config("energy");
  c.omega = 1.0;
  c.radius_sweep = parse_grid("0.1:0.9:9");
  std::ostringstream diag;
  const auto r = run(c, diag);
  ASSERT_EQ(r.exit_code, kOk) << r.message;
  std::vector<double> w;
  for (const auto& row : r.rows) {
    if (row.command == "energy/em" && row.method == "closed-form") w.push_back(row.value);
  }
  ASSERT_EQ(w.size(), 9u);
  for (std::size_t i = 1; i < w.size(); ++i) EXPECT_GT(w[i], w[i - 1]);
}

TEST(Run, PhysicsAndUsageErrors) {
  std::ostringstream diag;
  auto c = config("cf");
  c.beta = 1.0;
  auto r = run(c, diag);
  EXPECT_EQ(r.exit_code, kPhysics);
  EXPECT_NE(r.message.find("beta"), std::string::npos);

  c = config("cf");
  c.beta = 0.5;
  c.band = Band{0.5, 1.5};
  c.methods = {Method::closed_form};
  EXPECT_EQ(run(c, diag).exit_code, kUsage);

  c = config("energy");
  c.beta = 0.9995;
  EXPECT_EQ(run(c, diag).exit_code, kPhysics);

  EXPECT_EQ(run(config("nonsense"), diag).exit_code, kUsage);
}

TEST(Run, NumericFailureKeepsPartialRows) {
  auto c = config("cf");
  c.beta = 0.5;
  c.deltas = {1.0, 2.0};
  c.methods = {Method::quadrature};
  c.components = {{FieldPair::EE, 1, 1}, {FieldPair::EE, 2, 2}};
  c.tolerance = 1e-16;
  std::ostringstream diag;
  const auto r = run(c, diag);
  EXPECT_EQ(r.exit_code, kNumeric);
  ASSERT_FALSE(r.rows.empty());
  EXPECT_EQ(r.rows.back().method, "failed");
}

TEST(Run, SameSeedSameRows) {
  auto c = config("cf");
  c.beta = 0.4;
  c.deltas = {0.5, 1.5};
  c.methods = {Method::monte_carlo};
  c.realizations = 20;
  c.modes = 8;
  std::ostringstream d, a, b;
  write_csv(a, run(c, d).rows);
  write_csv(b, run(c, d).rows);
  EXPECT_EQ(a.str(), b.str());
  c.seed = 2;
  std::ostringstream e;
  write_csv(e, run(c, d).rows);
  EXPECT_NE(a.str(), e.str());
}

TEST(Binary, ValidateTwiceIsByteIdentical) {
  const auto a = scratch("v1.csv"), b = scratch("v2.csv");
  EXPECT_EQ(shell("validate --out " + a.string()), 0);
  EXPECT_EQ(shell("validate --out " + b.string()), 0);
  const std::string sa = slurp(a);
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, slurp(b));
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(shell("cf --beta 1.2 --out /dev/null"), 2);
  EXPECT_EQ(shell("cf --beta 0.5 --radius 0.2"), 1);
  EXPECT_EQ(shell("frobnicate"), 1);
  EXPECT_EQ(shell("cf --delta 1:2 --beta 0.3"), 1);
  EXPECT_EQ(shell("cf --beta 0.5 --delta 1 --out /nonexistent-dir/x.csv"), 1);
}

TEST(Binary, ConfigFileWithFlagOverride) {
  const auto cfgp = scratch("run.ini");
  {
    std::ofstream f(cfgp);
    f << "beta=0.3\ndelta=1.0\nmethods=closed\nformat=json\n";
  }
  const auto out = scratch("cfg.json");
  ASSERT_EQ(shell("cf --config " + cfgp.string() + " --beta 0.6 --out " + out.string()), 0);
  const auto j = nlohmann::json::parse(slurp(out));
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["rows"][0]["beta"].get<double>(), 0.6);
  EXPECT_EQ(j["rows"][0]["method"].get<std::string>(), "closed-form");
}
