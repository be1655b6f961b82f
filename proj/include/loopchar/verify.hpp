#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loopchar/serialize.hpp"

namespace loopchar {

struct CheckResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs the property checks of one module, or every module for "all".
/// Random samples come from fixed seeds, so the report depends only on the
/// library, not on timing or thread count. Throws std::invalid_argument for
/// an unknown suite.
std::vector<SuiteReport> run_suite(const std::string& name);

Json report_json(const std::vector<SuiteReport>& reports);
std::string report_text(const std::vector<SuiteReport>& reports);

}  // namespace loopchar
