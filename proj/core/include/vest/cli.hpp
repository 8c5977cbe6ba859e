#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vest::cli {

// Runs one command (args exclude the program name) against the given
// streams. Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 budget exceeded, 4 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vest::cli
