#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chirality::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDegenerate = 3;
inline constexpr int kIOFailure = 4;
inline constexpr int kSolverFailure = 5;

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chirality::cli
