#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mate::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUserError = 1,
  kExitValidation = 2,
  kExitBackend = 3,
};

/// Entry point shared by the `mate` binary and the tests. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace mate::cli
