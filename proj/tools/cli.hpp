#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solenoid::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kParseError = 2;

/// Runs one command. args[0] is the program name. Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solenoid::cli
