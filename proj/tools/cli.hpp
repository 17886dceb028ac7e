#pragma once

#include <iosfwd>
#include <string>
#include <utility>

namespace crossforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Desk-scale caps, lifted by --unsafe-large.
inline constexpr int kBruteForceMaxM = 15;
inline constexpr int kFormulaMaxM = 40;
inline constexpr int kMaxN = 40;

/// "a..b" or "a" as an inclusive range; throws std::invalid_argument.
std::pair<int, int> parse_range(const std::string& text);

/// Full command line, output routed to the given streams. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crossforge::cli
