#ifndef CIRCLEPHASE_CLI_HPP
#define CIRCLEPHASE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace circlephase::cli {

/// Runs the command-line front end on an argument list (without the program
/// name). Returns the process exit code: 0 success, 1 usage error,
/// 2 numeric or verification failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace circlephase::cli

#endif
