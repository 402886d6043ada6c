#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unitc::lang {

// Entry point behind main: parses the argument vector (program name already
// stripped), runs the requested subcommand, and returns the process exit
// code. 0 = all answers positive, 1 = some check/question failed, 2 = the
// run itself broke (usage, unreadable file, syntax error, semantic error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitc::lang
