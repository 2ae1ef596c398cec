#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace singchi::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitComputation = 1,
  kExitUsage = 2,
};

/// Runs one command line (without the program name). The JSON report goes
/// to `out`; diagnostics and banners go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singchi::cli
