#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcara::cli {

enum ExitCode : int {
    kSuccess = 0,
    kViolation = 1,  ///< experiment found a violation or counterexample candidate
    kInputError = 2,
    kPreconditionError = 3,
    kInternalError = 4,
};

/// Runs one verb. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`. `serial` forces single-threaded experiments.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool serial = false);

}  // namespace hcara::cli
