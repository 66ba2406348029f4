#pragma once

/// @file cli.hpp
/// @brief The `nowhere` command line: eval, sample, intervals, integrate, verify.

#include <iosfwd>
#include <string>
#include <vector>

namespace nowhere::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; `args` excludes the program name. Data goes to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace nowhere::cli
