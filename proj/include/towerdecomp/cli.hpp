#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace towerdecomp {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitValidation = 2,
  kExitVerification = 3,
};

/// Runs `towerdecomp <command> ...`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace towerdecomp
