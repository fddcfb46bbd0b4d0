#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lepage {

/// Runs one command line (without the program name). Returns 0 on success
/// or a passing check, 1 on a failing check, 2 on usage or parse errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lepage
