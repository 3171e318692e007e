#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pjohnson::cli {

// Runs one command (args exclude the program name). Returns the exit status:
// 0 success, 2 user error, 3 resource guard.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pjohnson::cli
