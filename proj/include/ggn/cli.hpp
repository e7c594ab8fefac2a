#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ggn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Runs the command line with `args` excluding the program name. Returns the
/// process exit code: 0 success, 1 usage error, 2 verification mismatch.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ggn::cli
