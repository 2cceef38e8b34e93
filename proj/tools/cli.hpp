#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace poisson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Artifacts go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poisson::cli
