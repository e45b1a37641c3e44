#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace endsym {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_domain = 2, exit_violation = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. The default --format comes from ENDSYM_FORMAT.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace endsym
