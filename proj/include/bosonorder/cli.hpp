#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bosonorder::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// Runs the command line given without the program name. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bosonorder::cli
