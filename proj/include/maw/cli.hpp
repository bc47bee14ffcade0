#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maw::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kValidationError = 2,
  kMismatch = 3,
  kLimitExceeded = 4,
};

/// Entry point of the `maw` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maw::cli
