#ifndef FRACDECOMP_TOOLS_CLI_HPP
#define FRACDECOMP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fracdecomp::cli {

/**
 * Runs one command line (without the program name). Returns the exit
 * status: 0 on success, 1 on malformed input, 2 on mathematical failure.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracdecomp::cli

#endif  // FRACDECOMP_TOOLS_CLI_HPP
