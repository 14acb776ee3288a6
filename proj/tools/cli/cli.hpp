#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rectfp::cli {

/// Process exit statuses. Distinct per failure class so scripts can triage.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kInfeasible = 2,
  kNonConvergent = 3,
  kVerificationFailed = 4,
};

/// Runs one command line. `args[0]` is the program name. A path of "-" reads
/// from `in` or writes to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rectfp::cli
