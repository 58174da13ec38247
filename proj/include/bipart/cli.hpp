#pragma once

#include <iosfwd>

namespace bipart {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSizeLimit = 3;
inline constexpr int kExitInternal = 4;

// Entry point of the `bipart` tool. Results go to out; failures produce one
// "error kind=<kind> ..." line on err.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bipart
