#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgdual::cli {

// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kMalformed = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kInternal = 3;

// Runs one invocation. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgdual::cli
