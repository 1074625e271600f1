#ifndef ENGELKIT_CLI_HPP
#define ENGELKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace engelkit::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
/// 3 enumeration cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

/// Run the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace engelkit::cli

#endif
