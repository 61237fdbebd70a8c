#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hornlr::cli {

/// Exit statuses of the hornlr tool.
enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,     // only with --fail-on-infeasible
  kUsage = 2,          // bad flags, malformed partitions, caps exceeded
  kInconsistent = 3,   // oracle self-check failure or sweep disagreement
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hornlr::cli
