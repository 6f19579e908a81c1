#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "core/system.hpp"

namespace ranum {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  bool applicable = false;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& check : checks) {
      if (!check.passed) return false;
    }
    return true;
  }
};

// Runs the property suites applicable to (a, r). suite selects
// "cylinders", "function", "fractal" or "all". Suites whose preconditions
// the system does not meet are reported as not applicable, not as failures.
std::vector<SuiteResult> run_verify(const SystemParams& sys, const std::string& suite);

nlohmann::json verify_json(const SystemParams& sys, const std::vector<SuiteResult>& suites);

bool verify_all_passed(const std::vector<SuiteResult>& suites);

}  // namespace ranum
