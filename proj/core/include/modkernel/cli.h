#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modkernel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Subcommands: kernelize, verify, blocking, lp, solve, generate.
// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modkernel
