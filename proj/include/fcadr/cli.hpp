#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcadr::cli {

enum ExitCode : int {
  ok = 0,
  usage_error = 1,
  data_error = 2,
  /// bench: two acquisition algorithms returned different rule sets.
  verification_failed = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcadr::cli
