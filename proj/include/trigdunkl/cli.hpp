#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigdunkl {

// Full command-line driver, callable in-process.  `args` excludes the
// program name; results go to `out` (or the --out file), diagnostics to
// `err`.  The return value is the process exit code: 0 success, 2 bad
// usage or config, 3 non-generic data, 4 failed verification, 5 solver
// failure, 1 anything else.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigdunkl
