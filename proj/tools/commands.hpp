#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sylowlab::cli {

// Runs one CLI invocation. args excludes the program name. Reports go to
// out, diagnostics to err. Returns 0 when everything passed, 1 when a
// verification failed, 2 on usage, parse or cap errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylowlab::cli
