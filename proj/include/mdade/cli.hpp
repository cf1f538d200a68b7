#ifndef MDADE_CLI_HPP
#define MDADE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mdade {

/// Runs one CLI invocation. Exit codes: 0 success, 1 a verification check
/// failed, 2 bad arguments or an execution error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdade

#endif
