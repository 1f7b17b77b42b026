#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfcli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kUsage = 2,
  kMathError = 3,
};

// Runs one `cf` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfcli
