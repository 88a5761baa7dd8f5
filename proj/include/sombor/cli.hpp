#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sombor::cli {

enum ExitCode : int {
  kConfirmed = 0,
  kUsageError = 1,
  kInconclusive = 2,
  kCounterexample = 3,
};

/// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sombor::cli
