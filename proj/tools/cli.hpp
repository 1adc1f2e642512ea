#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resonant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

// Runs the command line `args` (program name excluded). Results go to `out`
// unless --out is given; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 17 significant digits; -inf for log(0).
std::string format_real(double value);

}  // namespace resonant::cli
