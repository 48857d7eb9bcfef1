#pragma once

#include <string>
#include <vector>

namespace graphsep {

/// Exit codes: 0 biseparable/feasible, 1 GME/infeasible, 2 inconclusive,
/// 64 malformed input document, 65 state invariant violation, 70 usage error.
struct CliResult {
  int code = 0;
  std::string out;  // standard output (JSON)
  std::string err;  // diagnostics
};

/// Runs one command as the installed binary would; `args` excludes argv[0].
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace graphsep
