#pragma once

#include <ostream>

namespace fkw::cli {

enum ExitCode : int {
  kComputed = 0,
  kInputError = 1,
  kInconclusive = 2,
  kPathsDisagree = 3,
  kInternalError = 4,
};

/// Entry point of the fkw command line tool. Output goes to `out` (or the
/// --out file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fkw::cli
