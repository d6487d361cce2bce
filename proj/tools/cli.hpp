#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cechhom::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Environment variable naming the default table file ("seed" for the built-in one).
inline constexpr const char* kTableEnv = "CECHHOM_TABLE";

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cechhom::cli
