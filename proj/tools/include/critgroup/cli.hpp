#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace critgroup::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kHypothesisViolation = 3,
  kBudgetExceeded = 4,
  kVerificationFailed = 5,
};

/// Runs the command line `args` (program name excluded). Reports go to `out`,
/// diagnostics to `err`; `in` backs the "-" complex source.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace critgroup::cli
