#pragma once

#include <string>
#include <vector>

namespace linecolor {

// Exit codes: 0 success/colorable, 1 uncolorable/none found, 2 budget
// exhausted, 3 input error. Any coloring is re-verified before it is
// written; a failed re-verification aborts the process.
int run_cli(int argc, const char* const* argv);

// Convenience for tests: args exclude the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace linecolor
