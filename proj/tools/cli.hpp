#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgnf::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kParseFailure = 2,
  kQuadraticPart = 3,
  kNotNormalForm = 4,
};

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bgnf::cli
