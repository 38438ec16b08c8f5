#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modcurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInternal = 3;

// Runs the command line (args excludes the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modcurve::cli
