#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gbt::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  exit_claims_deviate = 2,
  exit_decider_disagreement = 3,
};

// Runs one `gbt` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbt::cli
