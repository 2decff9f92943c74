#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a mathematical
// check failed, 2 input or usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace ybsys::cli {

inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ybsys::cli
