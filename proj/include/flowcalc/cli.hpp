#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowcalc::cli {

/// Exit statuses.
inline constexpr int kOk = 0;        ///< success, or a decision was produced
inline constexpr int kRefused = 1;   ///< NotIrreducible or TrivialSFT
inline constexpr int kMalformed = 2; ///< usage, parse or other input errors
inline constexpr int kExampleFailed = 3;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowcalc::cli
