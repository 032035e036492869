#pragma once

// felog command-line front end. Exit codes: 0 success / pass,
// 1 verification failure, 2 usage or domain error, 3 I/O error.

#include <ostream>
#include <string>
#include <vector>

namespace felog::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// args excludes the program name. Results go to out (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace felog::cli
