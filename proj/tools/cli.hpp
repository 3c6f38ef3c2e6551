#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace avoidgray::cli {

/// Process exit codes, one per outcome class.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
};

/// Environment variable overriding the default word budget (a --budget flag wins over it).
inline constexpr const char* kBudgetEnv = "AVOIDGRAY_BUDGET";
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Runs one command line (args excludes the program name). Data goes to `out`,
/// diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avoidgray::cli
