#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace boxclique::cli {

// Exit codes: 0 = property/bound confirmed, 1 = refuted/fails,
// 2 = usage or format error, 3 = budget/timeout inconclusive.
inline constexpr int kExitConfirmed = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

// args excludes the program name. All output goes to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace boxclique::cli
