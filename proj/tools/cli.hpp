#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qdga::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailure = 1,
  kInputError = 2,
  kInconclusive = 3,
};

/// Runs the command line; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdga::cli
