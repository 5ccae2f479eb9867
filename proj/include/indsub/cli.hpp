#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indsub {

/// Exit statuses of `indsub solve`; verify uses 0/1/2 with the usual meaning.
enum ExitCode : int {
  kExitStable = 0,
  kExitInvalid = 1,
  kExitInput = 2,
  kExitSubdivision = 3,
  kExitRegimeFailure = 4,
};

/// Entry point of the command-line tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indsub
