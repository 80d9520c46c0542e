#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "polypart/verification.hpp"

namespace polypart::cli {

/// Output of the default verification suite, in job-list order.
struct SuiteReport {
  Settings settings;
  std::vector<VerificationReport> reports;

  bool passed() const;
};

/// Every identity over its default parameter grid, plus the Brion checks.
/// Jobs may run concurrently; the report order is the job-list order.
SuiteReport verify_all(const Settings& settings);

/// Command-line entry point; `args` excludes the program name.
/// Returns 0 on pass, 1 on a failed check, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polypart::cli
