#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcong::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Runs one subcommand. args excludes the program name; `in` backs "--in -".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace pcong::cli
