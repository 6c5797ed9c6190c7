#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grouptest::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInputError = 2;
inline constexpr int kCapabilityCap = 3;
inline constexpr int kEmptyPool = 4;

// Runs the grouptest command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grouptest::cli
