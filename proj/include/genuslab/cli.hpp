#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genuslab {

// Runs one command-line invocation; `args` excludes the program name.
// Reports go to `out`, diagnostics to `err`. Exit codes: 0 success, 1
// verification failure, 2 usage error, 3 exact enumeration paused at a
// checkpoint (--stop-after).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genuslab
