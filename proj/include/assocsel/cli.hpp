#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace assocsel {

// Runs one invocation of the command-line tool. args excludes the program
// name. Returns 0 iff every requested check passed, 1 if some check failed,
// 2 on usage, configuration or precondition errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace assocsel
