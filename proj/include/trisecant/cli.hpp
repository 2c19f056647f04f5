#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trisecant::cli {

enum ExitCode : int {
  ok = 0,
  expectation_failed = 1,  // computation ran, results differ from the published ones
  usage_error = 2,
};

/// Runs one command. args excludes the program name. Reports go to `out` (or
/// the --out file), diagnostics and usage to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisecant::cli
