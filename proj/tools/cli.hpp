#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankagg::cli {

// Runs one command line (without the program name). Returns the exit
// status: 0 success, 1 domain or resource error, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankagg::cli
