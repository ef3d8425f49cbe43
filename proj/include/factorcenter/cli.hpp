#ifndef FACTORCENTER_CLI_HPP
#define FACTORCENTER_CLI_HPP

#include <ostream>

namespace fc::cli {

enum ExitCode : int { kOk = 0, kVerifiedFalse = 1, kValidation = 2, kResource = 3 };

/// Runs one subcommand. JSON results go to `out` (or --output), JSON error
/// bodies to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fc::cli

#endif  // FACTORCENTER_CLI_HPP
