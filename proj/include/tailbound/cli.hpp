#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tailbound::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 success, 1 a verification failed or a computation did not
/// converge, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tailbound::cli
