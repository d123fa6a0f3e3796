#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rotzp/analytic_cf.hpp"
#include "rotzp/correlation.hpp"

namespace rotzp::cli {

enum class Format { csv, json };

struct RunConfig {
  std::string command;  // tetrad | cf | discrete | energy | validate
  std::optional<double> omega;
  std::optional<double> radius;
  std::optional<double> beta;
  bool si = false;
  std::vector<double> deltas;
  std::vector<Method> methods;
  std::vector<CFComponentId> components;
  std::uint64_t seed = 1;
  int realizations = 200;
  int modes = 48;
  std::optional<Band> band;
  int n_max = 8;
  std::vector<double> radius_sweep;
  std::optional<double> tolerance;
  std::string out;
  Format format = Format::csv;
};

struct Row {
  std::string command;
  double beta = 0.0;
  double gamma = 1.0;
  double delta = 0.0;
  std::string method;
  double value = 0.0;
  double std_error = 0.0;
  std::string units;
  std::uint64_t seed = 0;
};

inline constexpr const char* kCsvHeader = "command,beta,gamma,delta,method,value,std_error,units,seed";

enum ExitCode : int { kOk = 0, kUsage = 1, kPhysics = 2, kNumeric = 3 };

// "x" or "start:stop:count" (inclusive, evenly spaced).
std::vector<double> parse_grid(const std::string& s);
Band parse_band(const std::string& s);

// %.17g, with nan/inf spelled out.
std::string format_double(double v);

void write_csv(std::ostream& os, const std::vector<Row>& rows);
void write_json(std::ostream& os, const std::vector<Row>& rows);

// Writes rows to path (or standard output for "" or "-"). Throws
// std::invalid_argument for empty rows and std::runtime_error if the file cannot be
// written; no file is created in either case.
void emit_report(const std::vector<Row>& rows, Format format, const std::string& path);

struct RunResult {
  int exit_code = kOk;
  std::vector<Row> rows;
  std::string message;
};

// Computes the rows for a configuration. Never throws; errors map to exit codes
// and rows computed before a numeric failure are kept, followed by a marker row.
RunResult run(const RunConfig& config, std::ostream& diagnostics);

// Parses argv into a RunConfig (flags override --config file entries), runs it and
// emits the report. Returns the process exit code.
int main_entry(int argc, char** argv);

}  // namespace rotzp::cli
