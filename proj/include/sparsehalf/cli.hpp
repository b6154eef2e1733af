#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsehalf {

/// Dispatches one CLI invocation. `args` excludes the program name. All
/// reports are JSON on `out` (the gen subcommand emits edge-list text).
/// Exit codes: 0 success; 1 hypothesis/constraint violation; 2 resource
/// limit; 3 would-be theorem refutation; 64 usage error or malformed file.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sparsehalf
