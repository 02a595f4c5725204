#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it with in-memory streams.

#include <ostream>
#include <string>
#include <vector>

namespace qaffine {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntimeError = 1,
  kExitUsage = 2,
  kExitVerifyFailed = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaffine
