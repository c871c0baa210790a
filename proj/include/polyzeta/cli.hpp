#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace polyzeta::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;     // malformed flags, literals or model files
inline constexpr int kExitDomain = 3;    // spectrum, domain, precondition, capability
inline constexpr int kExitAccuracy = 4;  // accuracy/convergence failure, failed oracle check

// Runs one invocation; args excludes the program name. Results go to out,
// diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// Renders x with 12 digits after the point when 1e-4 <= |x| < 1e12 (or x = 0),
// otherwise in scientific notation with 12 significant digits.
std::string format_real(double x);

}  // namespace polyzeta::cli
