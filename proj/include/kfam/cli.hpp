#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kfam {

/// Runs one command line (without the program name). The JSON report goes to
/// `out`, diagnostics to `err`. Returns 0 when every check passes, 1 when a
/// check fails and 2 on usage, parse, domain or refusal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kfam
