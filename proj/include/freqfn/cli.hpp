#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freqfn::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 a check suite found a
/// violated invariant (one "fail ..." line per violation on `out`).
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kViolation = 2;

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freqfn::cli
