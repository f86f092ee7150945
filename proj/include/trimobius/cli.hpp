#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trimobius::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computation, verification, or I/O failure
inline constexpr int kExitUsage = 2;

// argv[0] is the program name.  Artifacts go to `out` unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trimobius::cli
