#ifndef RATIOSPACE_CLI_HPP
#define RATIOSPACE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ratiospace::cli {

enum ExitCode : int { Success = 0, Failure = 1, InputError = 2 };

/**
 * Runs one invocation. args excludes the program name. The JSON report goes
 * to --output if given, otherwise to `out`; diagnostics go to `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace ratiospace::cli

#endif
