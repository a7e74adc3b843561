#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monodir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUndecidable = 3;

/// Runs `monodir <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounds to 9 significant digits, the precision used in all JSON output.
double round9(double v);

}  // namespace monodir::cli
