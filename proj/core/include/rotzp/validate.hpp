#pragma once

// Self-test harness: every module's invariants evaluated on fixed grids, reported
// as max residual against tolerance.

#include <cstdint>
#include <string>
#include <vector>

namespace rotzp {

struct CheckResult {
  std::string module;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ValidationOptions {
  std::uint64_t seed = 20240917;
  int realizations = 400;
  // Scales every tolerance; 1 keeps the defaults.
  double tolerance_scale = 1.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

ValidationReport run_validation(const ValidationOptions& options = {});

}  // namespace rotzp
