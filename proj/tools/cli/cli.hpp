#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagdom::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kUsage = 2,
  kCapacity = 3,
};

/// Runs the tool on `args` (without the program name). Everything meant for
/// stdout goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagdom::cli
