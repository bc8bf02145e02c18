#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace w2line {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitBadInput = 2,
  kExitPropertyViolation = 3,
  kExitSizeCap = 4,
};

// Runs one CLI invocation; args excludes the program name. Subcommands: dist,
// geodesic, extend, flow, isom, ot, curvature, embed, check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace w2line
