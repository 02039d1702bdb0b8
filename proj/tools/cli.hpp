#pragma once

#include <ostream>

namespace fiberdesign::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kInputError = 2;
inline constexpr int kCapExceeded = 3;

/// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fiberdesign::cli
